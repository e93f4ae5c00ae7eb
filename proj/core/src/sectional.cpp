#include "arqkit/sectional.hpp"

#include "arqkit/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace arqkit {

void check_path(const TranslationQuiver& w, const std::vector<int>& path)
{
    if (path.empty())
        throw Error("empty path");
    for (int v : path)
        if (v < 0 || static_cast<std::size_t>(v) >= w.size())
            throw Error("path vertex outside the window");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (w.valuation(path[i], path[i + 1]) == 0)
            throw Error("no arrow " + w.vertex(path[i]).id + " -> " + w.vertex(path[i + 1]).id);
}

bool is_sectional(const TranslationQuiver& w, const std::vector<int>& path)
{
    check_path(w, path);
    for (std::size_t i = 2; i < path.size(); ++i)
        if (w.tau(path[i]) == path[i - 2])
            return false;
    return true;
}

bool is_presectional(const TranslationQuiver& w, const std::vector<int>& path)
{
    check_path(w, path);
    for (std::size_t i = 2; i < path.size(); ++i) {
        int t = w.tau(path[i]);
        if (t < 0)
            continue;
        int front = path[i - 1];
        int back = path[i - 2];
        if (t == back) {
            if (w.valuation(back, front) < 2)
                return false;
            continue;
        }
        if (w.valuation(t, front) == 0)
            return false;
    }
    return true;
}

bool pred_complete(const TranslationQuiver& w, int v)
{
    return w.vertex(v).mesh_complete;
}

bool succ_complete(const TranslationQuiver& w, int v)
{
    int u = w.tau_inv(v);
    if (u >= 0)
        return w.vertex(u).mesh_complete;
    return w.vertex(v).ext_injective && w.vertex(v).mesh_complete;
}

std::string to_string(OrbitClass c)
{
    switch (c) {
    case OrbitClass::Periodic:
        return "periodic";
    case OrbitClass::Finite:
        return "finite";
    case OrbitClass::LeftStableOnly:
        return "left-stable-only";
    case OrbitClass::RightStableOnly:
        return "right-stable-only";
    case OrbitClass::StableNonperiodic:
        return "stable-nonperiodic";
    case OrbitClass::WindowUndetermined:
        return "window-undetermined";
    }
    return "?";
}

OrbitGraph tau_orbits(const TranslationQuiver& w)
{
    OrbitGraph g;
    const int n = static_cast<int>(w.size());
    g.orbit_of.assign(n, -1);
    auto walk = [&](int start) {
        Orbit o;
        int v = start;
        while (v >= 0 && g.orbit_of[v] < 0) {
            g.orbit_of[v] = static_cast<int>(g.orbits.size());
            o.members.push_back(v);
            v = w.tau(v);
        }
        return std::pair{o, v};
    };
    for (int s = 0; s < n; ++s) {
        if (g.orbit_of[s] >= 0 || w.tau_inv(s) >= 0)
            continue;
        auto [o, end] = walk(s);
        (void)end;
        const TqVertex& right = w.vertex(o.members.front());
        const TqVertex& left = w.vertex(o.members.back());
        bool left_closed = left.projective;
        bool right_closed = right.ext_injective;
        if (left_closed && right_closed)
            o.cls = OrbitClass::Finite;
        else if (left_closed && right.right_infinite)
            o.cls = OrbitClass::RightStableOnly;
        else if (right_closed && left.left_infinite)
            o.cls = OrbitClass::LeftStableOnly;
        else if (!left_closed && !right_closed && left.left_infinite && right.right_infinite)
            o.cls = OrbitClass::StableNonperiodic;
        g.orbits.push_back(std::move(o));
    }
    for (int s = 0; s < n; ++s) {
        if (g.orbit_of[s] >= 0)
            continue;
        auto [o, end] = walk(s);
        (void)end;
        o.cls = OrbitClass::Periodic;
        o.period = static_cast<int>(o.members.size());
        g.orbits.push_back(std::move(o));
    }
    std::set<std::pair<int, int>> adj;
    for (const auto& a : w.arrows()) {
        int x = g.orbit_of[a.src];
        int y = g.orbit_of[a.dst];
        if (x != y)
            adj.insert({std::min(x, y), std::max(x, y)});
    }
    g.adjacency.assign(adj.begin(), adj.end());
    return g;
}

std::string OrbitGraph::to_string(const TranslationQuiver& w) const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        os << "orbit " << i << ' ' << arqkit::to_string(o.cls);
        if (o.period > 0)
            os << " period " << o.period;
        os << ':';
        for (int v : o.members)
            os << ' ' << w.vertex(v).id;
        os << '\n';
    }
    for (auto [a, b] : adjacency)
        os << "adjacent " << a << ' ' << b << '\n';
    return os.str();
}

std::vector<bool> left_stable_in_window(const TranslationQuiver& w)
{
    const int n = static_cast<int>(w.size());
    std::vector<bool> res(n, false);
    for (int v = 0; v < n; ++v) {
        std::vector<bool> seen(n, false);
        int u = v;
        bool ok = false;
        while (true) {
            if (seen[u]) {
                ok = true;
                break;
            }
            seen[u] = true;
            if (w.vertex(u).projective)
                break;
            int t = w.tau(u);
            if (t < 0) {
                ok = !w.vertex(u).mesh_complete || w.vertex(u).left_infinite;
                break;
            }
            u = t;
        }
        res[v] = ok;
    }
    return res;
}

std::vector<bool> right_stable_in_window(const TranslationQuiver& w)
{
    return left_stable_in_window(w.opposite());
}

std::vector<std::vector<int>> masked_components(const TranslationQuiver& w, const std::vector<bool>& mask)
{
    const int n = static_cast<int>(w.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (!mask[s] || comp[s] >= 0)
            continue;
        std::vector<int> members;
        std::deque<int> q{s};
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            members.push_back(v);
            auto visit = [&](int u) {
                if (mask[u] && comp[u] < 0) {
                    comp[u] = comp[s];
                    q.push_back(u);
                }
            };
            for (int ai : w.in_arrows(v))
                visit(w.arrows()[ai].src);
            for (int ai : w.out_arrows(v))
                visit(w.arrows()[ai].dst);
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

bool sectional_with(const TranslationQuiver& w, const std::vector<int>& arrows, int extra)
{
    std::vector<int> all = arrows;
    all.push_back(extra);
    const auto& as = w.arrows();
    for (int b : all)
        for (int c : all) {
            if (b != extra && c != extra)
                continue;
            if (as[b].dst != as[c].src)
                continue;
            if (w.tau(as[c].dst) == as[b].src)
                return false;
        }
    return true;
}

std::vector<int> open_members(const TranslationQuiver& w, const std::vector<int>& vs)
{
    std::vector<int> out;
    for (int v : vs)
        if (!pred_complete(w, v) || !succ_complete(w, v))
            out.push_back(v);
    return out;
}

} // namespace

bool is_sectional_subgraph(const TranslationQuiver& w, const std::vector<int>& arrows)
{
    const auto& as = w.arrows();
    for (int b : arrows)
        for (int c : arrows)
            if (as[b].dst == as[c].src && w.tau(as[c].dst) == as[b].src)
                return false;
    return true;
}

SectionalSubgraph full_sectional_subgraph(const TranslationQuiver& w, int seed, const std::vector<bool>* allowed)
{
    if (seed < 0 || static_cast<std::size_t>(seed) >= w.size())
        throw Error("seed outside the window");
    auto ok = [&](int v) { return !allowed || (*allowed)[v]; };
    if (!ok(seed))
        throw Error("seed not in the allowed set");
    const auto& as = w.arrows();
    std::vector<bool> in_vertex(w.size(), false);
    std::vector<bool> in_arrow(as.size(), false);
    std::vector<int> arrows;
    in_vertex[seed] = true;
    auto id = [&](int v) -> const std::string& { return w.vertex(v).id; };
    while (true) {
        std::vector<std::pair<std::pair<int, std::string>, int>> cands;
        for (std::size_t ai = 0; ai < as.size(); ++ai) {
            if (in_arrow[ai])
                continue;
            const auto& a = as[ai];
            if (!ok(a.src) || !ok(a.dst))
                continue;
            if (in_vertex[a.dst])
                cands.push_back({{0, id(a.src) + '\n' + id(a.dst)}, static_cast<int>(ai)});
            else if (in_vertex[a.src])
                cands.push_back({{1, id(a.dst) + '\n' + id(a.src)}, static_cast<int>(ai)});
        }
        std::sort(cands.begin(), cands.end());
        bool grown = false;
        for (const auto& c : cands) {
            if (!sectional_with(w, arrows, c.second))
                continue;
            arrows.push_back(c.second);
            in_arrow[c.second] = true;
            in_vertex[as[c.second].src] = true;
            in_vertex[as[c.second].dst] = true;
            grown = true;
            break;
        }
        if (!grown)
            break;
    }
    SectionalSubgraph s;
    for (std::size_t v = 0; v < w.size(); ++v)
        if (in_vertex[v])
            s.vertices.push_back(static_cast<int>(v));
    std::sort(arrows.begin(), arrows.end());
    s.arrows = std::move(arrows);
    s.full = true;
    s.open = open_members(w, s.vertices);
    return s;
}

UndirectedGraph sectional_graph(const TranslationQuiver& w, const SectionalSubgraph& s)
{
    UndirectedGraph g;
    std::vector<int> local(w.size(), -1);
    for (int v : s.vertices)
        local[v] = g.add_vertex(w.vertex(v).id);
    for (int ai : s.arrows) {
        const auto& a = w.arrows()[ai];
        g.add_edge(local[a.src], local[a.dst], a.val);
    }
    return g;
}

DiagramType subgraph_type(const TranslationQuiver& w, const SectionalSubgraph& s)
{
    if (!s.full)
        throw Error("sectional subgraph is not full");
    DiagramType t = classify(sectional_graph(w, s));
    t.boundary_open = s.boundary_open();
    return t;
}

DiagramType window_semantic_type(const TranslationQuiver& w, const SectionalSubgraph& s)
{
    UndirectedGraph g = sectional_graph(w, s);
    DiagramType t = classify(g);
    t.boundary_open = s.boundary_open();
    if (!t.boundary_open)
        return t;
    std::vector<int> local(w.size(), -1);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        local[s.vertices[i]] = static_cast<int>(i);
    std::vector<int> degree(g.size(), 0);
    for (const auto& e : g.edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    std::vector<int> open;
    for (int v : s.open)
        open.push_back(local[v]);
    if (t.family == DiagramType::Family::A) {
        if (g.size() == 1) {
            t.family = DiagramType::Family::AInf;
            t.n = 0;
            return t;
        }
        bool ends_only = std::all_of(open.begin(), open.end(), [&](int v) { return degree[v] <= 1; });
        if (ends_only) {
            t.family = open.size() == 1 ? DiagramType::Family::AInf : DiagramType::Family::AInfInf;
            t.n = 0;
        }
        return t;
    }
    if (t.family == DiagramType::Family::D && open.size() == 1 && degree[open[0]] == 1) {
        int branch = -1;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (degree[v] == 3)
                branch = static_cast<int>(v);
        // Distance from branch point to each leaf; the open leaf must be strictly farthest.
        std::vector<int> dist(g.size(), -1);
        std::deque<int> q;
        if (branch < 0) {
            return t;
        }
        dist[branch] = 0;
        q.push_back(branch);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbors(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        bool farthest = true;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (static_cast<int>(v) != open[0] && degree[v] == 1 && dist[v] >= dist[open[0]])
                farthest = false;
        if (farthest || t.n == 4) {
            t.family = DiagramType::Family::DInf;
            t.n = 0;
        }
    }
    return t;
}

namespace {

std::vector<bool> reachable_from_injectives(const TranslationQuiver& w)
{
    std::vector<bool> seen(w.size(), false);
    std::deque<int> q;
    for (std::size_t v = 0; v < w.size(); ++v)
        if (w.vertex(v).ext_injective) {
            seen[v] = true;
            q.push_back(static_cast<int>(v));
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int ai : w.out_arrows(v)) {
            int u = w.arrows()[ai].dst;
            if (!seen[u]) {
                seen[u] = true;
                q.push_back(u);
            }
        }
    }
    return seen;
}

bool helical_with(const TranslationQuiver& w, const std::vector<int>& component, const std::vector<bool>& reach)
{
    bool any_injective = false;
    for (std::size_t v = 0; v < w.size(); ++v)
        any_injective = any_injective || w.vertex(v).ext_injective;
    if (!any_injective)
        return false;
    for (int v : component) {
        int u = w.tau(v);
        for (std::size_t k = 0; u >= 0 && u != v && k < w.size(); ++k)
            u = w.tau(u);
        if (u == v)
            return false;
    }
    bool any_interior = false;
    for (int v : component) {
        if (!w.vertex(v).mesh_complete)
            continue;
        any_interior = true;
        if (!reach[v])
            return false;
    }
    return any_interior;
}

} // namespace

bool is_helical(const TranslationQuiver& w, const std::vector<int>& component)
{
    return helical_with(w, component, reachable_from_injectives(w));
}

LeftSubgraphType left_subgraph_type(const TranslationQuiver& w, const std::vector<int>& component)
{
    if (component.empty())
        throw Error("empty component");
    auto reach = reachable_from_injectives(w);
    LeftSubgraphType res;
    if (helical_with(w, component, reach)) {
        res.helical = true;
        res.type.family = DiagramType::Family::AInf;
        res.type.boundary_open = true;
        return res;
    }
    std::vector<bool> comp(w.size(), false);
    for (int v : component)
        comp[v] = true;
    std::vector<int> seeds;
    for (int v : component)
        if (!reach[v])
            seeds.push_back(v);
    std::sort(seeds.begin(), seeds.end(),
              [&](int a, int b) { return w.vertex(a).id < w.vertex(b).id; });
    for (int s : seeds) {
        SectionalSubgraph sigma = full_sectional_subgraph(w, s, &comp);
        bool inside = std::all_of(sigma.vertices.begin(), sigma.vertices.end(), [&](int v) { return !reach[v]; });
        if (!inside || sigma.boundary_open())
            continue;
        res.type = subgraph_type(w, sigma);
        res.sigma = std::move(sigma);
        return res;
    }
    throw Error("window too small: no full sectional subgraph lies in the interior of the left-stable part");
}

LeftSubgraphType left_subgraph_type(const TranslationQuiver& w)
{
    auto comps = masked_components(w, left_stable_in_window(w));
    if (comps.empty())
        throw Error("window has no left-stable vertices");
    if (comps.size() > 1)
        throw Error("left-stable part is disconnected; pass a component");
    return left_subgraph_type(w, comps.front());
}

std::optional<TauShiftedPath> find_tau_shifted_path(const TranslationQuiver& w, int x, int y)
{
    const int n = static_cast<int>(w.size());
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw Error("vertex outside the window");
    auto shift = [&](int v, int k) {
        for (; k > 0 && v >= 0; --k)
            v = w.tau(v);
        for (; k < 0 && v >= 0; ++k)
            v = w.tau_inv(v);
        return v;
    };
    std::vector<int> from(n);
    std::vector<int> dist(n);
    for (int m = 0; m <= n; ++m) {
        for (int k : {m, -m}) {
            if (m == 0 && k < 0)
                continue;
            int target = shift(y, k);
            if (target < 0)
                continue;
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int> q{x};
            dist[x] = 0;
            while (!q.empty() && dist[target] < 0) {
                int v = q.front();
                q.pop_front();
                for (int ai : w.out_arrows(v)) {
                    int u = w.arrows()[ai].dst;
                    if (dist[u] < 0) {
                        dist[u] = dist[v] + 1;
                        from[u] = v;
                        q.push_back(u);
                    }
                }
            }
            if (dist[target] < 0)
                continue;
            TauShiftedPath p;
            p.n = k;
            for (int v = target; v != x; v = from[v])
                p.path.push_back(v);
            p.path.push_back(x);
            std::reverse(p.path.begin(), p.path.end());
            p.sectional = is_sectional(w, p.path);
            return p;
        }
    }
    return std::nullopt;
}

} // namespace arqkit
