#include "arqkit/knitting.hpp"

#include "arqkit/error.hpp"
#include "arqkit/sectional.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace arqkit {

MeshResult complete_mesh(const IntVec& known, const std::vector<std::pair<int, IntVec>>& middles)
{
    IntVec sum(known.size(), 0);
    for (const auto& [val, d] : middles) {
        if (d.size() != known.size())
            throw Error("dimension vectors of different arity in mesh");
        sum = sum + Int(val) * d;
    }
    MeshResult r;
    r.dim = sum - known;
    bool zero = std::all_of(r.dim.begin(), r.dim.end(), [](const Int& x) { return x == 0; });
    bool negative = std::any_of(r.dim.begin(), r.dim.end(), [](const Int& x) { return x < 0; });
    r.closes = zero || negative;
    return r;
}

namespace {

/// Rightward mesh completion shared by the hereditary and seeded knits.
class Knitter {
public:
    Knitter(TranslationQuiver& w, int max_depth) : w_(w), max_depth_(max_depth), depth_(w.size(), 0) {}

    std::function<std::string(int)> name_for;
    std::function<bool(int)> blocked = [](int) { return false; };

    int add_vertex(TqVertex v, int depth)
    {
        int idx = w_.add_vertex(std::move(v));
        depth_.resize(w_.size(), 0);
        depth_[idx] = depth;
        return idx;
    }

    bool resolved(int v) const { return w_.tau_inv(v) >= 0 || w_.vertex(v).ext_injective; }

    /// One slice: every vertex ready at the start gets its translate or is closed.
    bool round()
    {
        std::vector<int> ready;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            int v = static_cast<int>(i);
            const TqVertex& x = w_.vertex(v);
            if (resolved(v) || !x.mesh_complete || depth_[v] >= max_depth_ || blocked(v))
                continue;
            bool ok = true;
            for (auto [p, val] : w_.preds(v)) {
                (void)val;
                ok = ok && resolved(p);
            }
            if (ok)
                ready.push_back(v);
        }
        std::sort(ready.begin(), ready.end(), [&](int a, int b) { return w_.vertex(a).id < w_.vertex(b).id; });
        for (int v : ready)
            translate(v);
        return !ready.empty();
    }

private:
    void translate(int v)
    {
        const TqVertex& x = w_.vertex(v);
        if (!x.dim)
            throw Error("missing dimension vector at " + x.id);
        std::vector<std::pair<int, IntVec>> middles;
        auto succs = w_.succs(v);
        for (auto [s, val] : succs) {
            if (!w_.vertex(s).dim)
                throw Error("missing dimension vector at " + w_.vertex(s).id);
            middles.push_back({val, *w_.vertex(s).dim});
        }
        MeshResult r = complete_mesh(*x.dim, middles);
        if (r.closes) {
            w_.vertex(v).ext_injective = true;
            return;
        }
        std::string id = name_for(v);
        int t;
        if (auto existing = w_.find(id)) {
            t = *existing;
            if (w_.vertex(t).dim != r.dim)
                throw Error("inconsistent identification: " + id + " has dimension " +
                            to_string(*w_.vertex(t).dim) + ", mesh gives " + to_string(r.dim));
            for (auto [p, val] : w_.preds(t)) {
                (void)val;
                bool middle = std::any_of(succs.begin(), succs.end(), [&](const auto& s) { return s.first == p; });
                if (!middle)
                    throw Error("inconsistent identification: " + w_.vertex(p).id + " -> " + id +
                                " is not in the mesh of " + x.id);
            }
            w_.vertex(t).mesh_complete = true;
        } else {
            TqVertex nv;
            nv.id = id;
            nv.label = id;
            nv.dim = r.dim;
            nv.mesh_complete = true;
            t = add_vertex(std::move(nv), depth_[v] + 1);
        }
        for (auto [s, val] : succs) {
            int have = w_.valuation(s, t);
            if (have == 0)
                w_.add_arrow(s, t, val);
            else if (have != val)
                throw Error("inconsistent valuation on " + w_.vertex(s).id + " -> " + id);
        }
        w_.set_tau(t, v);
    }

    TranslationQuiver& w_;
    int max_depth_;
    std::vector<int> depth_;
};

TranslationQuiver knit_right(const Quiver& q, int slice_cap, const std::string& prefix)
{
    if (q.has_loop() || !q.acyclic())
        throw Error("knitting needs an acyclic quiver without loops");
    if (slice_cap < 0)
        throw Error("slice cap must be non-negative");
    TranslationQuiver w;
    Knitter k(w, slice_cap);
    IntMatrix pc = q.path_counts();
    const std::size_t n = q.size();
    std::vector<std::string> base;
    std::vector<int> step;
    for (std::size_t j = 0; j < n; ++j) {
        TqVertex v;
        v.id = prefix + q.vertices()[j].id;
        v.label = v.id;
        IntVec d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = pc(j, i);
        v.dim = d;
        v.projective = true;
        v.mesh_complete = true;
        k.add_vertex(std::move(v), 0);
        base.push_back(prefix + q.vertices()[j].id);
        step.push_back(0);
    }
    for (const auto& a : q.arrows())
        w.bump_arrow(a.dst, a.src, 1);
    k.name_for = [&](int v) { return base[v] + "_" + std::to_string(step[v] + 1); };
    while (k.round()) {
        std::size_t old = base.size();
        base.resize(w.size());
        step.resize(w.size());
        for (std::size_t v = old; v < w.size(); ++v) {
            int t = w.tau(static_cast<int>(v));
            base[v] = base[t];
            step[v] = step[t] + 1;
        }
    }
    return w;
}

} // namespace

TranslationQuiver knit_hereditary(const Quiver& q, KnitDirection dir, int slice_cap)
{
    TranslationQuiver w;
    if (dir == KnitDirection::Right)
        w = knit_right(q, slice_cap, "P");
    else
        w = knit_right(q.opposite(), slice_cap, "I").opposite();
    label_by_dims(w, q, dir);
    return w;
}

void label_by_dims(TranslationQuiver& w, const Quiver& q, KnitDirection prefer)
{
    const std::size_t n = q.size();
    IntMatrix pc = q.path_counts();
    std::vector<IntVec> p(n, IntVec(n)), inj(n, IntVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            p[j][i] = pc(j, i);
            inj[j][i] = pc(i, j);
        }
    auto named = [&](const IntVec& d) -> std::string {
        for (std::size_t j = 0; j < n; ++j)
            if (d == p[j])
                return "P" + q.vertices()[j].id;
        for (std::size_t j = 0; j < n; ++j)
            if (d == inj[j])
                return "I" + q.vertices()[j].id;
        for (std::size_t j = 0; j < n; ++j)
            if (d == unit_vector(n, j))
                return "S" + q.vertices()[j].id;
        return {};
    };
    std::vector<std::string> base(w.size());
    for (std::size_t v = 0; v < w.size(); ++v)
        if (w.vertex(v).dim && w.vertex(v).dim->size() == n)
            base[v] = named(*w.vertex(v).dim);
    auto along = [&](int v, bool to_projective) -> std::string {
        int k = 0;
        for (int u = v; u >= 0; u = to_projective ? w.tau(u) : w.tau_inv(u), ++k) {
            const TqVertex& x = w.vertex(u);
            char want = to_projective ? 'P' : 'I';
            bool end = to_projective ? x.projective : x.ext_injective;
            if (end && !base[u].empty() && base[u][0] == want)
                return (to_projective ? "tau^-" + std::to_string(k) : k == 1 ? "tau" : "tau^" + std::to_string(k)) +
                       "(" + base[u] + ")";
        }
        return {};
    };
    for (std::size_t v = 0; v < w.size(); ++v) {
        if (!base[v].empty()) {
            w.vertex(v).label = base[v];
            continue;
        }
        bool right = prefer == KnitDirection::Right;
        std::string l = along(static_cast<int>(v), right);
        if (l.empty())
            l = along(static_cast<int>(v), !right);
        if (!l.empty())
            w.vertex(v).label = l;
    }
}

namespace {

IntVec parse_dims(const std::string& s)
{
    IntVec d;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        try {
            d.push_back(Int(tok));
        } catch (const std::exception&) {
            throw Error("bad dimension vector '" + s + "'");
        }
    }
    return d;
}

} // namespace

Seeds parse_seeds(std::string_view text)
{
    std::string all(text);
    std::istringstream is(all);
    std::string line;
    std::string head;
    std::vector<std::string> tail;
    bool in_schedule = false;
    while (std::getline(is, line)) {
        std::string trimmed = line.substr(0, line.find('#'));
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
        if (!in_schedule && trimmed == "schedule") {
            in_schedule = true;
            continue;
        }
        if (in_schedule)
            tail.push_back(trimmed);
        else
            head += line + '\n';
    }
    Seeds s;
    s.window = parse_ar_quiver(head);
    for (const auto& l : tail) {
        if (l.empty())
            continue;
        std::istringstream ls(l);
        std::vector<std::string> t;
        for (std::string w; ls >> w;)
            t.push_back(w);
        ScheduleEntry e;
        if (t[0] == "name" && t.size() == 3) {
            e.kind = ScheduleEntry::Kind::Name;
            e.refs = {t[1]};
            e.id = t[2];
        } else if (t[0] == "step" && t.size() >= 4) {
            try {
                e.step = std::stoi(t[1]);
            } catch (const std::exception&) {
                throw Error("bad schedule step '" + t[1] + "'");
            }
            if (t[2] == "project" && t.size() >= 5) {
                e.kind = ScheduleEntry::Kind::Project;
                e.id = t[3];
                e.dim = parse_dims(t[4]);
                e.refs.assign(t.begin() + 5, t.end());
            } else if (t[2] == "inject" && t.size() == 4) {
                e.kind = ScheduleEntry::Kind::Inject;
                e.id = t[3];
            } else {
                throw Error("bad schedule entry '" + l + "'");
            }
        } else {
            throw Error("bad schedule entry '" + l + "'");
        }
        s.schedule.push_back(std::move(e));
    }
    return s;
}

TranslationQuiver knit_from_seeds(const Seeds& seeds, int cap)
{
    if (cap < 1)
        throw Error("cap must be positive");
    ValidationReport rep = validate(seeds.window);
    for (const auto& f : rep.findings)
        if (f.severity == Severity::Error)
            throw Error("inconsistent seeds: " + f.message);
    TranslationQuiver w = seeds.window;
    Knitter k(w, cap - 1);
    std::map<std::string, std::string> names;
    int last_step = 0;
    for (const auto& e : seeds.schedule) {
        if (e.kind == ScheduleEntry::Kind::Name)
            names[e.refs.front()] = e.id;
        else
            last_step = std::max(last_step, e.step);
    }
    k.name_for = [&](int v) {
        auto it = names.find(w.vertex(v).id);
        return it != names.end() ? it->second : "tau-(" + w.vertex(v).id + ")";
    };
    auto lookup = [&](const std::string& id) {
        auto v = w.find(id);
        if (!v)
            throw Error("schedule references unknown label '" + id + "'");
        return *v;
    };
    for (int r = 0;; ++r) {
        for (const auto& e : seeds.schedule) {
            if (e.kind == ScheduleEntry::Kind::Name || e.step != r)
                continue;
            if (e.kind == ScheduleEntry::Kind::Inject) {
                w.vertex(lookup(e.id)).ext_injective = true;
                continue;
            }
            std::vector<int> rad;
            for (const auto& ref : e.refs)
                rad.push_back(lookup(ref));
            TqVertex v;
            v.id = e.id;
            v.label = e.id;
            v.dim = e.dim;
            v.projective = true;
            v.mesh_complete = true;
            int p = k.add_vertex(std::move(v), 0);
            for (int x : rad)
                w.bump_arrow(x, p, 1);
        }
        std::set<std::string> pending;
        for (const auto& e : seeds.schedule)
            if (e.kind == ScheduleEntry::Kind::Project && e.step > r)
                pending.insert(e.refs.begin(), e.refs.end());
        k.blocked = [&](int v) { return pending.count(w.vertex(v).id) > 0; };
        bool progress = k.round();
        if (!progress && r >= last_step)
            break;
    }
    return w;
}

Int harada_sai_bound(int n)
{
    if (n < 1)
        throw Error("Harada-Sai bound needs n >= 1");
    return (Int(1) << n) - 1;
}

Bounds make_bounds(const Int& m, const Int& s)
{
    if (m < 1 || s < 1)
        throw Error("bounds need positive m and s");
    return Bounds{m, s};
}

std::pair<Int, Int> length_bounds(const Bounds& b, const Int& l_y)
{
    Int p = b.p();
    Int lo = l_y - l_y * p;
    if (lo < 1)
        lo = 1;
    return {lo, l_y * (1 + p)};
}

std::string to_string(Growth g)
{
    switch (g) {
    case Growth::Bounded:
        return "bounded-evidence";
    case Growth::Growing:
        return "growing-evidence";
    case Growth::Undetermined:
        return "undetermined";
    }
    return "?";
}

std::optional<Int> vertex_length(const TqVertex& v)
{
    if (v.length)
        return v.length;
    if (!v.dim)
        return std::nullopt;
    Int s = 0;
    for (const auto& x : *v.dim)
        s += x;
    return s;
}

namespace {

std::string trend_of(const std::vector<Int>& ls, bool periodic)
{
    if (periodic)
        return "periodic";
    if (ls.size() < 2)
        return "short";
    bool inc = true, eq = true, dec = true;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        inc = inc && ls[i] > ls[i - 1];
        dec = dec && ls[i] < ls[i - 1];
        eq = eq && ls[i] == ls[i - 1];
    }
    if (inc)
        return "increasing";
    if (eq)
        return "constant";
    if (dec)
        return "decreasing";
    return "mixed";
}

} // namespace

GrowthReport growth_analysis(const TranslationQuiver& w)
{
    GrowthReport rep;
    auto vs = finiteness_verdict(w);
    bool all_finite = !vs.empty();
    for (const auto& cv : vs) {
        if (cv.verdict == Verdict::Infinite && rep.growth != Growth::Growing) {
            rep.growth = Growth::Growing;
            rep.rule = cv.rule;
        }
        all_finite = all_finite && cv.verdict == Verdict::Finite;
    }
    if (rep.growth != Growth::Growing && all_finite) {
        rep.growth = Growth::Bounded;
        rep.rule = vs.front().rule;
    }
    OrbitGraph og = tau_orbits(w);
    for (const auto& o : og.orbits) {
        OrbitTrend t;
        t.members.assign(o.members.rbegin(), o.members.rend());
        for (int v : t.members)
            if (auto l = vertex_length(w.vertex(v)))
                t.lengths.push_back(*l);
        t.trend = trend_of(t.lengths, o.cls == OrbitClass::Periodic);
        rep.trends.push_back(std::move(t));
    }
    return rep;
}

std::string GrowthReport::to_string(const TranslationQuiver& w) const
{
    std::ostringstream os;
    os << "growth: " << arqkit::to_string(growth);
    if (!rule.empty())
        os << " [" << rule << ']';
    os << '\n';
    for (const auto& t : trends) {
        os << "orbit " << w.vertex(t.members.front()).id << ": " << t.trend;
        for (const auto& l : t.lengths)
            os << ' ' << l;
        os << '\n';
    }
    return os.str();
}

} // namespace arqkit
