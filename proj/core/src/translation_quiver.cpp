#include "arqkit/translation_quiver.hpp"
#include "arqkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arqkit {

int TranslationQuiver::add_vertex(TqVertex v)
{
    if (v.id.empty())
        throw Error("empty vertex id");
    for (char c : v.id)
        if (c == ' ' || c == '\t' || c == '\n' || c == '"' || c == '#')
            throw Error("vertex id '" + v.id + "' contains a reserved character");
    if (index_.count(v.id))
        throw Error("duplicate vertex id '" + v.id + "'");
    if (v.label.empty())
        v.label = v.id;
    int idx = static_cast<int>(vertices_.size());
    index_.emplace(v.id, idx);
    vertices_.push_back(std::move(v));
    tau_.push_back(-1);
    tau_inv_.push_back(-1);
    in_.emplace_back();
    out_.emplace_back();
    return idx;
}

void TranslationQuiver::add_arrow(int src, int dst, int val)
{
    if (src < 0 || dst < 0 || src >= static_cast<int>(size()) || dst >= static_cast<int>(size()))
        throw Error("arrow endpoint out of range");
    if (val < 1)
        throw Error("valuation must be positive");
    if (arrow_index_.count({src, dst}))
        throw Error("duplicate arrow " + vertices_[src].id + " -> " + vertices_[dst].id);
    int idx = static_cast<int>(arrows_.size());
    arrows_.push_back({src, dst, val});
    arrow_index_.emplace(std::make_pair(src, dst), idx);
    out_[src].push_back(idx);
    in_[dst].push_back(idx);
}

void TranslationQuiver::add_arrow(std::string_view src, std::string_view dst, int val)
{
    add_arrow(index(src), index(dst), val);
}

void TranslationQuiver::bump_arrow(int src, int dst, int val)
{
    auto it = arrow_index_.find({src, dst});
    if (it == arrow_index_.end())
        add_arrow(src, dst, val);
    else
        arrows_[it->second].val += val;
}

void TranslationQuiver::remove_arrow(int src, int dst)
{
    auto it = arrow_index_.find({src, dst});
    if (it == arrow_index_.end())
        throw Error("no arrow " + vertices_.at(src).id + " -> " + vertices_.at(dst).id);
    arrows_.erase(arrows_.begin() + it->second);
    rebuild_adjacency();
}

void TranslationQuiver::rebuild_adjacency()
{
    arrow_index_.clear();
    for (auto& v : in_)
        v.clear();
    for (auto& v : out_)
        v.clear();
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const auto& a = arrows_[i];
        arrow_index_.emplace(std::make_pair(a.src, a.dst), static_cast<int>(i));
        out_[a.src].push_back(static_cast<int>(i));
        in_[a.dst].push_back(static_cast<int>(i));
    }
}

void TranslationQuiver::set_tau(int z, int tz)
{
    if (z < 0 || tz < 0 || z >= static_cast<int>(size()) || tz >= static_cast<int>(size()))
        throw Error("tau endpoint out of range");
    if (vertices_[z].projective)
        throw Error("tau defined on projective vertex '" + vertices_[z].id + "'");
    if (tau_[z] != -1 && tau_[z] != tz)
        throw Error("tau defined twice on '" + vertices_[z].id + "'");
    if (tau_inv_[tz] != -1 && tau_inv_[tz] != z)
        throw Error("tau not injective: '" + vertices_[tz].id + "' is the translate of two vertices");
    tau_[z] = tz;
    tau_inv_[tz] = z;
}

void TranslationQuiver::set_tau(std::string_view z, std::string_view tz)
{
    set_tau(index(z), index(tz));
}

void TranslationQuiver::clear_tau(int z)
{
    int t = tau_.at(z);
    if (t >= 0)
        tau_inv_[t] = -1;
    tau_[z] = -1;
}

std::optional<int> TranslationQuiver::find(std::string_view id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int TranslationQuiver::index(std::string_view id) const
{
    auto v = find(id);
    if (!v)
        throw Error("unknown vertex '" + std::string(id) + "'");
    return *v;
}

int TranslationQuiver::valuation(int src, int dst) const
{
    auto it = arrow_index_.find({src, dst});
    return it == arrow_index_.end() ? 0 : arrows_[it->second].val;
}

std::vector<std::pair<int, int>> TranslationQuiver::preds(int v) const
{
    std::vector<std::pair<int, int>> r;
    for (int a : in_.at(v))
        r.emplace_back(arrows_[a].src, arrows_[a].val);
    return r;
}

std::vector<std::pair<int, int>> TranslationQuiver::succs(int v) const
{
    std::vector<std::pair<int, int>> r;
    for (int a : out_.at(v))
        r.emplace_back(arrows_[a].dst, arrows_[a].val);
    return r;
}

std::vector<std::pair<int, int>> TranslationQuiver::tau_pairs() const
{
    std::vector<std::pair<int, int>> r;
    for (std::size_t v = 0; v < size(); ++v)
        if (tau_[v] >= 0)
            r.emplace_back(static_cast<int>(v), tau_[v]);
    return r;
}

TranslationQuiver TranslationQuiver::induced(const std::vector<int>& keep) const
{
    TranslationQuiver r;
    std::vector<int> map(size(), -1);
    for (int v : keep) {
        if (map.at(v) >= 0)
            continue;
        map[v] = r.add_vertex(vertices_[v]);
    }
    for (const auto& a : arrows_)
        if (map[a.src] >= 0 && map[a.dst] >= 0)
            r.add_arrow(map[a.src], map[a.dst], a.val);
    for (int v : keep)
        if (tau_[v] >= 0 && map[tau_[v]] >= 0 && r.tau(map[v]) < 0)
            r.set_tau(map[v], map[tau_[v]]);
    return r;
}

TranslationQuiver TranslationQuiver::opposite() const
{
    TranslationQuiver r;
    for (std::size_t v = 0; v < size(); ++v) {
        TqVertex x = vertices_[v];
        std::swap(x.projective, x.ext_injective);
        std::swap(x.left_infinite, x.right_infinite);
        int ti = tau_inv_[v];
        if (ti >= 0)
            x.mesh_complete = vertices_[ti].mesh_complete;
        else
            x.mesh_complete = vertices_[v].ext_injective && vertices_[v].mesh_complete;
        r.add_vertex(std::move(x));
    }
    for (const auto& a : arrows_)
        r.add_arrow(a.dst, a.src, a.val);
    for (std::size_t v = 0; v < size(); ++v)
        if (tau_inv_[v] >= 0)
            r.set_tau(static_cast<int>(v), tau_inv_[v]);
    return r;
}

std::vector<std::string> TranslationQuiver::ids(const std::vector<int>& vs) const
{
    std::vector<std::string> r;
    r.reserve(vs.size());
    for (int v : vs)
        r.push_back(vertices_.at(v).id);
    return r;
}

std::size_t ValidationReport::errors() const
{
    return std::count_if(findings.begin(), findings.end(),
                         [](const Finding& f) { return f.severity == Severity::Error; });
}

std::size_t ValidationReport::warnings() const
{
    return findings.size() - errors();
}

std::size_t ValidationReport::count(std::string_view rule) const
{
    return std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.rule == rule; });
}

std::string ValidationReport::to_string() const
{
    std::ostringstream out;
    for (const auto& f : findings) {
        out << (f.severity == Severity::Error ? "error" : "warning") << ' ' << f.rule;
        for (const auto& id : f.ids)
            out << ' ' << id;
        out << ": " << f.message << '\n';
    }
    return out.str();
}

namespace {

using Multiset = std::vector<std::pair<int, int>>;

Multiset sorted(Multiset m)
{
    std::sort(m.begin(), m.end());
    return m;
}

class CycleSearch {
public:
    CycleSearch(const TranslationQuiver& tq, const ValidateOptions& opts, ValidationReport& report)
        : tq_(tq), opts_(opts), report_(report), allowed_(tq.size())
    {
        for (std::size_t v = 0; v < tq.size(); ++v)
            allowed_[v] = !tq.vertex(static_cast<int>(v)).projective && !tq.vertex(static_cast<int>(v)).ext_injective;
    }

    void run()
    {
        for (std::size_t s = 0; s < tq_.size() && reported_ < opts_.max_cycle_reports; ++s) {
            if (!allowed_[s])
                continue;
            start_ = static_cast<int>(s);
            path_ = {start_};
            dfs();
        }
    }

private:
    void dfs()
    {
        if (reported_ >= opts_.max_cycle_reports || ++steps_ > kStepBudget)
            return;
        int last = path_.back();
        for (auto [w, val] : tq_.succs(last)) {
            (void)val;
            if (w < start_ || !allowed_[w])
                continue;
            if (path_.size() >= 2 && tq_.tau(w) == path_[path_.size() - 2])
                continue;
            if (w == start_) {
                if (path_.size() >= 2 && closes_sectionally())
                    report();
                continue;
            }
            if (path_.size() >= opts_.sectional_cycle_cap)
                continue;
            if (std::find(path_.begin(), path_.end(), w) != path_.end())
                continue;
            path_.push_back(w);
            dfs();
            path_.pop_back();
        }
    }

    bool closes_sectionally() const
    {
        // Wrap-around triples: (x_{n-1}, x_0, x_1) and (x_{n-2}, x_{n-1}, x_0) was checked on entry.
        std::size_t n = path_.size();
        return tq_.tau(path_[1 % n]) != path_[n - 1];
    }

    void report()
    {
        Finding f;
        f.severity = Severity::Warning;
        f.rule = "w1-sectional-cycle";
        f.ids = tq_.ids(path_);
        f.message = "sectional cycle of length " + std::to_string(path_.size()) +
                    " with no projective or Ext-injective vertex";
        report_.findings.push_back(std::move(f));
        ++reported_;
    }

    static constexpr std::size_t kStepBudget = 2'000'000;
    const TranslationQuiver& tq_;
    const ValidateOptions& opts_;
    ValidationReport& report_;
    std::vector<bool> allowed_;
    std::vector<int> path_;
    int start_ = 0;
    std::size_t reported_ = 0;
    std::size_t steps_ = 0;
};

} // namespace

ValidationReport validate(const TranslationQuiver& tq, const ValidateOptions& opts)
{
    ValidationReport report;
    auto error = [&](std::string rule, std::vector<std::string> ids, std::string msg) {
        report.findings.push_back({Severity::Error, std::move(rule), std::move(ids), std::move(msg)});
    };

    std::optional<std::size_t> arity;
    for (const auto& v : tq.vertices()) {
        if (v.dim) {
            if (!arity)
                arity = v.dim->size();
            else if (*arity != v.dim->size())
                error("dim-arity", {v.id}, "dimension vector has " + std::to_string(v.dim->size()) +
                                               " entries, expected " + std::to_string(*arity));
            for (const auto& x : *v.dim)
                if (x < 0)
                    error("dim-negative", {v.id}, "dimension vector has a negative entry");
        }
        if (v.dim && v.length) {
            Int sum = 0;
            for (const auto& x : *v.dim)
                sum += x;
            if (sum != *v.length)
                error("length", {v.id}, "length " + v.length->str() + " differs from dimension sum " + sum.str());
        }
    }

    std::vector<int> seen(tq.size(), -1);
    for (std::size_t z = 0; z < tq.size(); ++z) {
        int tz = tq.tau(static_cast<int>(z));
        if (tz < 0)
            continue;
        const auto& vz = tq.vertex(static_cast<int>(z));
        if (vz.projective)
            error("tau-projective", {vz.id}, "translation defined on a projective vertex");
        if (seen[tz] >= 0)
            error("tau-injective", {vz.id, tq.vertex(seen[tz]).id}, "two vertices share a translate");
        seen[tz] = static_cast<int>(z);
        if (!vz.mesh_complete)
            continue;
        Multiset in = sorted(tq.preds(static_cast<int>(z)));
        Multiset out = sorted(tq.succs(tz));
        if (in != out) {
            error("mesh", {vz.id, tq.vertex(tz).id},
                  "predecessors of " + vz.id + " differ from successors of " + tq.vertex(tz).id);
            continue;
        }
        const auto& vt = tq.vertex(tz);
        if (!vz.dim || !vt.dim || vz.dim->size() != vt.dim->size())
            continue;
        IntVec lhs = *vz.dim + *vt.dim;
        IntVec rhs(lhs.size());
        bool complete = true;
        for (auto [y, val] : in) {
            const auto& vy = tq.vertex(y);
            if (!vy.dim || vy.dim->size() != rhs.size()) {
                complete = false;
                break;
            }
            rhs = rhs + Int(val) * *vy.dim;
        }
        if (complete && lhs != rhs)
            error("additivity", {vz.id, vt.id},
                  "dim " + vt.id + " + dim " + vz.id + " = (" + to_string(lhs) + ") but middle terms sum to (" +
                      to_string(rhs) + ")");
    }

    CycleSearch(tq, opts, report).run();

    for (const auto& a : tq.arrows()) {
        if (a.src != a.dst)
            continue;
        const auto& v = tq.vertex(a.src);
        if (v.projective || v.ext_injective || tq.tau(a.src) == a.src)
            continue;
        report.findings.push_back({Severity::Warning, "w2-loop", {v.id},
                                   "loop on a vertex that is neither projective nor Ext-injective and not tau-fixed"});
    }
    return report;
}

std::vector<std::vector<int>> component_indices(const TranslationQuiver& tq)
{
    std::vector<int> parent(tq.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& a : tq.arrows())
        unite(a.src, a.dst);
    for (auto [z, tz] : tq.tau_pairs())
        unite(z, tz);
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(tq.size(), -1);
    for (std::size_t v = 0; v < tq.size(); ++v) {
        int r = find(static_cast<int>(v));
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(static_cast<int>(v));
    }
    return comps;
}

std::vector<TranslationQuiver> connected_components(const TranslationQuiver& tq)
{
    std::vector<TranslationQuiver> r;
    for (const auto& c : component_indices(tq))
        r.push_back(tq.induced(c));
    return r;
}

} // namespace arqkit
