#include "arqkit/translation_quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace arqkit {

namespace {

class Matcher {
public:
    Matcher(const TranslationQuiver& a, const TranslationQuiver& b, const IsoOptions& opts)
        : a_(a), b_(b), opts_(opts)
    {
    }

    std::optional<std::vector<int>> run()
    {
        if (a_.size() != b_.size() || a_.arrows().size() != b_.arrows().size() ||
            a_.tau_pairs().size() != b_.tau_pairs().size())
            return std::nullopt;
        refine();
        std::map<int, int> ca, cb;
        for (int c : color_a_)
            ++ca[c];
        for (int c : color_b_)
            ++cb[c];
        if (ca != cb)
            return std::nullopt;
        order_vertices(ca);
        map_.assign(a_.size(), -1);
        used_.assign(b_.size(), false);
        if (!extend(0))
            return std::nullopt;
        return map_;
    }

private:
    std::string initial_key(const TranslationQuiver& q, int v) const
    {
        const auto& x = q.vertex(v);
        std::ostringstream k;
        k << x.projective << x.ext_injective << (opts_.match_mesh_flags ? x.mesh_complete : false)
          << (q.tau(v) >= 0) << (q.tau_inv(v) >= 0) << '|' << q.valuation(v, v);
        if (opts_.match_labels)
            k << '|' << x.label;
        if (opts_.match_dims)
            k << '|' << (x.dim ? to_string(*x.dim) : std::string("-"));
        return k.str();
    }

    std::string refined_key(const TranslationQuiver& q, const std::vector<int>& color, int v) const
    {
        std::vector<std::pair<int, int>> in, out;
        for (auto [p, val] : q.preds(v))
            in.emplace_back(color[p], val);
        for (auto [s, val] : q.succs(v))
            out.emplace_back(color[s], val);
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        std::ostringstream k;
        k << color[v] << ';';
        for (auto [c, val] : in)
            k << c << ':' << val << ',';
        k << ';';
        for (auto [c, val] : out)
            k << c << ':' << val << ',';
        k << ';' << (q.tau(v) >= 0 ? color[q.tau(v)] : -1) << ';' << (q.tau_inv(v) >= 0 ? color[q.tau_inv(v)] : -1);
        return k.str();
    }

    template <typename KeyFn>
    std::size_t recolor(KeyFn key)
    {
        std::map<std::string, int> ids;
        std::vector<std::string> ka(a_.size()), kb(b_.size());
        for (std::size_t v = 0; v < a_.size(); ++v)
            ids.emplace(ka[v] = key(a_, color_a_, static_cast<int>(v)), 0);
        for (std::size_t v = 0; v < b_.size(); ++v)
            ids.emplace(kb[v] = key(b_, color_b_, static_cast<int>(v)), 0);
        int next = 0;
        for (auto& [k, id] : ids)
            id = next++;
        std::vector<int> na(a_.size()), nb(b_.size());
        for (std::size_t v = 0; v < a_.size(); ++v)
            na[v] = ids[ka[v]];
        for (std::size_t v = 0; v < b_.size(); ++v)
            nb[v] = ids[kb[v]];
        color_a_ = std::move(na);
        color_b_ = std::move(nb);
        return ids.size();
    }

    void refine()
    {
        color_a_.assign(a_.size(), 0);
        color_b_.assign(b_.size(), 0);
        std::size_t classes =
            recolor([this](const TranslationQuiver& q, const std::vector<int>&, int v) { return initial_key(q, v); });
        for (;;) {
            std::size_t next = recolor([this](const TranslationQuiver& q, const std::vector<int>& c, int v) {
                return refined_key(q, c, v);
            });
            if (next == classes)
                break;
            classes = next;
        }
    }

    void order_vertices(const std::map<int, int>& class_size)
    {
        std::vector<bool> placed(a_.size(), false);
        std::vector<int> roots(a_.size());
        for (std::size_t v = 0; v < a_.size(); ++v)
            roots[v] = static_cast<int>(v);
        std::stable_sort(roots.begin(), roots.end(), [&](int x, int y) {
            return class_size.at(color_a_[x]) < class_size.at(color_a_[y]);
        });
        for (int r : roots) {
            if (placed[r])
                continue;
            std::queue<int> q;
            q.push(r);
            placed[r] = true;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                order_.push_back(v);
                auto visit = [&](int w) {
                    if (w >= 0 && !placed[w]) {
                        placed[w] = true;
                        q.push(w);
                    }
                };
                for (auto [w, val] : a_.succs(v))
                    visit(w);
                for (auto [w, val] : a_.preds(v))
                    visit(w);
                visit(a_.tau(v));
                visit(a_.tau_inv(v));
            }
        }
    }

    bool consistent(int va, int vb) const
    {
        if (a_.valuation(va, va) != b_.valuation(vb, vb))
            return false;
        for (std::size_t x = 0; x < a_.size(); ++x) {
            int mx = map_[x];
            if (mx < 0)
                continue;
            int xi = static_cast<int>(x);
            if (a_.valuation(va, xi) != b_.valuation(vb, mx) || a_.valuation(xi, va) != b_.valuation(mx, vb))
                return false;
            if ((a_.tau(va) == xi) != (b_.tau(vb) == mx) || (a_.tau(xi) == va) != (b_.tau(mx) == vb))
                return false;
        }
        return true;
    }

    bool extend(std::size_t pos)
    {
        if (pos == order_.size())
            return true;
        int va = order_[pos];
        for (std::size_t vb = 0; vb < b_.size(); ++vb) {
            int w = static_cast<int>(vb);
            if (used_[vb] || color_b_[vb] != color_a_[va] || !consistent(va, w))
                continue;
            map_[va] = w;
            used_[vb] = true;
            if (extend(pos + 1))
                return true;
            map_[va] = -1;
            used_[vb] = false;
        }
        return false;
    }

    const TranslationQuiver& a_;
    const TranslationQuiver& b_;
    const IsoOptions& opts_;
    std::vector<int> color_a_, color_b_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const TranslationQuiver& a, const TranslationQuiver& b,
                                                 const IsoOptions& opts)
{
    return Matcher(a, b, opts).run();
}

} // namespace arqkit
