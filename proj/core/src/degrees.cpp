#include "arqkit/degrees.hpp"

#include "arqkit/error.hpp"
#include "arqkit/knitting.hpp"
#include "arqkit/sectional.hpp"
#include "arqkit/tubes.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace arqkit {

std::string DegreeBound::to_string() const
{
    switch (kind) {
    case Kind::ExactlyOne:
        return "exactly_one";
    case Kind::AtLeast:
        return "at_least(" + std::to_string(n) + ")";
    case Kind::Infinite:
        return "infinite";
    case Kind::Unknown:
        return "unknown";
    }
    return "?";
}

std::string DegreeBound::certificate(const TranslationQuiver& w) const
{
    if (rule.empty())
        return "none";
    std::string s = rule;
    if (!witness.empty()) {
        s += ':';
        for (std::size_t i = 0; i < witness.size(); ++i)
            s += (i ? " -> " : " ") + w.vertex(witness[i]).id;
    }
    return s;
}

namespace {

/// Coordinates (i, j) of each vertex when its component is a recognized stable tube.
class TubeCoordinates {
public:
    explicit TubeCoordinates(const TranslationQuiver& w) : height_(w.size(), 0)
    {
        for (const auto& comp : component_indices(w)) {
            TranslationQuiver sub = w.induced(comp);
            auto params = recognize_tube(sub);
            if (!params || !params->insertions.empty())
                continue;
            TranslationQuiver tube = stable_tube(params->rank, static_cast<int>(comp.size()) / params->rank);
            auto iso = find_isomorphism(sub, tube);
            if (!iso)
                continue;
            for (std::size_t k = 0; k < comp.size(); ++k) {
                int i = 0, j = 0;
                if (std::sscanf(tube.vertex((*iso)[k]).id.c_str(), "(%d,%d)", &i, &j) == 2)
                    height_[comp[k]] = j;
            }
        }
    }

    /// Quasi-length, 0 outside recognized stable tubes.
    int height(int v) const { return height_[v]; }

private:
    std::vector<int> height_;
};

class LeftDegrees {
public:
    explicit LeftDegrees(const TranslationQuiver& w) : w_(w), tubes_(w) {}

    DegreeBound infer(int src, int dst) const
    {
        if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= w_.size() ||
            static_cast<std::size_t>(dst) >= w_.size() || w_.valuation(src, dst) == 0)
            throw Error("arrow not in window");
        DegreeBound b;
        const TqVertex& y = w_.vertex(dst);
        if (y.projective)
            return b;
        auto preds = w_.preds(dst);
        if (w_.tau(dst) >= 0 && y.mesh_complete && preds.size() == 1 && preds[0].second == 1) {
            auto lx = vertex_length(w_.vertex(src));
            auto ly = vertex_length(y);
            if (!lx || !ly || *lx > *ly) {
                b.kind = DegreeBound::Kind::ExactlyOne;
                b.rule = "R1";
                b.witness = {w_.tau(dst), src, dst};
                return b;
            }
        }
        if (tubes_.height(src) > 0 && tubes_.height(dst) == tubes_.height(src) + 1) {
            b.kind = DegreeBound::Kind::Infinite;
            b.rule = "R3-tube";
            b.witness = coray_into(dst, src);
            return b;
        }
        int best = 0;
        std::vector<int> best_path;
        for (auto [x1, val] : preds) {
            if (w_.vertex(x1).projective)
                continue;
            if (x1 == src && val < 2)
                continue;
            Search s(w_);
            auto res = s.run(x1, dst);
            if (res.cyclic) {
                b.kind = DegreeBound::Kind::Infinite;
                b.rule = "R3-cycle";
                b.witness = res.path;
                return b;
            }
            if (static_cast<int>(res.path.size()) - 1 > best) {
                best = static_cast<int>(res.path.size()) - 1;
                best_path = res.path;
            }
        }
        if (best > 0) {
            b.kind = DegreeBound::Kind::AtLeast;
            b.n = best + 1;
            b.rule = "R2";
            b.witness = best_path;
        }
        return b;
    }

    /// Certified infinite pre-sectional path entering dst through x1.
    bool infinite_through(int x1, int dst) const
    {
        if (w_.vertex(x1).projective || w_.vertex(dst).projective)
            return false;
        if (tubes_.height(dst) > 0 && tubes_.height(x1) == tubes_.height(dst) + 1)
            return true;
        Search s(w_);
        return s.run(x1, dst).cyclic;
    }

private:
    struct Result {
        bool cyclic = false;
        /// X_n, ..., X_1, Y.
        std::vector<int> path;
    };

    /// Longest pre-sectional path over states (front, next), or a reachable cycle.
    class Search {
    public:
        explicit Search(const TranslationQuiver& w) : w_(w) {}

        Result run(int x1, int y)
        {
            Result r;
            visit({x1, y});
            if (cyclic_) {
                r.cyclic = true;
                r.path = cycle_path_;
                return r;
            }
            std::pair<int, int> s{x1, y};
            r.path = {y, x1};
            while (true) {
                auto it = next_.find(s);
                if (it == next_.end() || it->second < 0)
                    break;
                s = {it->second, s.first};
                r.path.push_back(s.first);
            }
            std::reverse(r.path.begin(), r.path.end());
            return r;
        }

    private:
        int visit(std::pair<int, int> s)
        {
            if (cyclic_)
                return 0;
            auto it = memo_.find(s);
            if (it != memo_.end()) {
                if (it->second < 0) {
                    cyclic_ = true;
                    cycle_path_ = {s.second, s.first};
                }
                return std::max(it->second, 0);
            }
            memo_[s] = -1;
            auto [front, next] = s;
            int t = w_.tau(next);
            int best = 1;
            int choice = -1;
            if (t < 0 || w_.valuation(t, front) > 0) {
                for (auto [c, val] : w_.preds(front)) {
                    if (w_.vertex(c).projective)
                        continue;
                    if (c == t && val < 2)
                        continue;
                    int l = 1 + visit({c, front});
                    if (cyclic_)
                        return 0;
                    if (l > best) {
                        best = l;
                        choice = c;
                    }
                }
            }
            memo_[s] = best;
            next_[s] = choice;
            return best;
        }

        const TranslationQuiver& w_;
        std::map<std::pair<int, int>, int> memo_;
        std::map<std::pair<int, int>, int> next_;
        bool cyclic_ = false;
        std::vector<int> cycle_path_;
    };

    std::vector<int> coray_into(int y, int x) const
    {
        std::vector<int> path{y};
        int cur = y;
        int skip = x;
        while (true) {
            int up = -1;
            for (auto [p, val] : w_.preds(cur)) {
                (void)val;
                if (p != skip && tubes_.height(p) == tubes_.height(cur) + 1)
                    up = p;
            }
            if (up < 0 || std::find(path.begin(), path.end(), up) != path.end())
                break;
            path.push_back(up);
            skip = -1;
            cur = up;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    const TranslationQuiver& w_;
    TubeCoordinates tubes_;
};

DegreeBound as_right(DegreeBound b)
{
    b.side = Side::Right;
    std::reverse(b.witness.begin(), b.witness.end());
    return b;
}

} // namespace

DegreeBound infer_left_degree(const TranslationQuiver& w, int src, int dst)
{
    return LeftDegrees(w).infer(src, dst);
}

DegreeBound infer_right_degree(const TranslationQuiver& w, int src, int dst)
{
    TranslationQuiver op = w.opposite();
    return as_right(LeftDegrees(op).infer(dst, src));
}

std::vector<DegreeBound> all_left_degrees(const TranslationQuiver& w)
{
    LeftDegrees ld(w);
    std::vector<DegreeBound> out;
    for (const auto& a : w.arrows())
        out.push_back(ld.infer(a.src, a.dst));
    return out;
}

std::vector<DegreeBound> all_right_degrees(const TranslationQuiver& w)
{
    TranslationQuiver op = w.opposite();
    LeftDegrees ld(op);
    std::vector<DegreeBound> out;
    for (const auto& a : w.arrows())
        out.push_back(as_right(ld.infer(a.dst, a.src)));
    return out;
}

DegreeBound infer_global_left_degree(const TranslationQuiver& w, int src, int dst)
{
    if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= w.size() ||
        static_cast<std::size_t>(dst) >= w.size() || w.valuation(src, dst) == 0)
        throw Error("arrow not in window");
    auto stable = left_stable_in_window(w);
    if (!stable[src] || !stable[dst])
        throw Error("global degree needs left-stable endpoints");
    LeftDegrees ld(w);
    DegreeBound b;
    std::vector<int> merging;
    for (auto [x1, val] : w.preds(dst)) {
        (void)val;
        if (ld.infinite_through(x1, dst))
            merging.push_back(x1);
    }
    if (merging.size() >= 2) {
        b.kind = DegreeBound::Kind::Infinite;
        b.rule = "global-merge";
        b.witness = {merging[0], dst, merging[1]};
        return b;
    }
    std::vector<DegreeBound> shifts;
    bool periodic = false;
    int x = src, y = dst;
    while (x >= 0 && y >= 0 && w.valuation(x, y) > 0) {
        shifts.push_back(ld.infer(x, y));
        x = w.tau(x);
        y = w.tau(y);
        if (x == src && y == dst) {
            periodic = true;
            break;
        }
    }
    if (!periodic) {
        x = w.tau_inv(src);
        y = w.tau_inv(dst);
        while (x >= 0 && y >= 0 && w.valuation(x, y) > 0) {
            shifts.push_back(ld.infer(x, y));
            x = w.tau_inv(x);
            y = w.tau_inv(y);
        }
    }
    auto one = std::find_if(shifts.begin(), shifts.end(),
                            [](const DegreeBound& d) { return d.kind == DegreeBound::Kind::ExactlyOne; });
    if (one != shifts.end()) {
        b = *one;
        b.rule = "global-fold";
        return b;
    }
    if (periodic) {
        bool all_inf = std::all_of(shifts.begin(), shifts.end(), [](const DegreeBound& d) { return d.infinite(); });
        bool all_bounded = std::all_of(shifts.begin(), shifts.end(), [](const DegreeBound& d) {
            return d.infinite() || d.kind == DegreeBound::Kind::AtLeast;
        });
        if (all_inf) {
            b.kind = DegreeBound::Kind::Infinite;
            b.rule = "global-fold";
        } else if (all_bounded) {
            b.kind = DegreeBound::Kind::AtLeast;
            b.n = 0;
            for (const auto& d : shifts)
                if (!d.infinite() && (b.n == 0 || d.n < b.n))
                    b.n = d.n;
            b.rule = "global-fold";
        }
    }
    return b;
}

std::vector<Finding> cycle_degree_consistency(const TranslationQuiver& w, std::size_t cycle_cap)
{
    auto left = all_left_degrees(w);
    auto right = all_right_degrees(w);
    std::map<std::pair<int, int>, int> arrow_of;
    for (std::size_t i = 0; i < w.arrows().size(); ++i)
        arrow_of[{w.arrows()[i].src, w.arrows()[i].dst}] = static_cast<int>(i);
    std::vector<Finding> out;
    const int n = static_cast<int>(w.size());
    std::vector<int> path;
    std::vector<bool> on(n, false);
    auto report = [&]() {
        bool all_left = true, all_right = true;
        for (std::size_t i = 0; i < path.size(); ++i) {
            int a = arrow_of.at({path[i], path[(i + 1) % path.size()]});
            all_left = all_left && left[a].infinite();
            all_right = all_right && right[a].infinite();
        }
        if (!all_left && !all_right)
            return;
        Finding f;
        f.rule = "cycle-degree";
        f.ids = w.ids(path);
        f.message = std::string("oriented cycle with every arrow of certified infinite ") +
                    (all_left ? "left" : "right") + " degree";
        out.push_back(std::move(f));
    };
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int ai : w.out_arrows(v)) {
            int u = w.arrows()[ai].dst;
            if (u == start) {
                report();
                continue;
            }
            if (u < start || on[u] || path.size() >= cycle_cap)
                continue;
            on[u] = true;
            path.push_back(u);
            dfs(start, u);
            path.pop_back();
            on[u] = false;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on[s] = true;
        dfs(s, s);
        on[s] = false;
    }
    return out;
}

} // namespace arqkit
