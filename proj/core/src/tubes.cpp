#include "arqkit/tubes.hpp"
#include "arqkit/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace arqkit {

int DirectedTree::add_vertex(std::string id)
{
    vertices.push_back(std::move(id));
    return static_cast<int>(vertices.size()) - 1;
}

void DirectedTree::add_arrow(int src, int dst)
{
    arrows.emplace_back(src, dst);
}

void DirectedTree::check() const
{
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : arrows) {
        if (a == b)
            throw Error("tree has a loop");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw Error("tree has a multiple arrow");
    }
    if (vertices.empty() || arrows.size() + 1 != vertices.size() || !underlying().connected())
        throw Error("underlying graph is not a tree");
}

UndirectedGraph DirectedTree::underlying() const
{
    UndirectedGraph g;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        g.vertices.push_back(vertices[i]);
    for (auto [a, b] : arrows)
        g.add_edge(a, b);
    return g;
}

DirectedTree dynkin_tree(const DiagramType& t)
{
    UndirectedGraph g = make_diagram(t);
    DirectedTree b;
    for (const auto& v : g.vertices)
        b.add_vertex("x" + v);
    for (const auto& e : g.edges)
        b.add_arrow(e.a, e.b);
    return b;
}

namespace {

std::string zb_id(int n, const std::string& x)
{
    return "(" + std::to_string(n) + "," + x + ")";
}

} // namespace

TranslationQuiver zb_window(const DirectedTree& b, int lo, int hi)
{
    if (lo > hi)
        throw Error("zb_window: empty range");
    b.check();
    TranslationQuiver w;
    for (int n = lo; n <= hi; ++n)
        for (const auto& x : b.vertices) {
            TqVertex v;
            v.id = zb_id(n, x);
            v.mesh_complete = n < hi;
            v.left_infinite = n == hi;
            v.right_infinite = n == lo;
            w.add_vertex(std::move(v));
        }
    int width = static_cast<int>(b.vertices.size());
    auto at = [&](int n, int x) { return (n - lo) * width + x; };
    for (int n = lo; n <= hi; ++n)
        for (auto [x, y] : b.arrows) {
            w.add_arrow(at(n, x), at(n, y));
            if (n - 1 >= lo)
                w.add_arrow(at(n, y), at(n - 1, x));
        }
    for (int n = lo; n < hi; ++n)
        for (int x = 0; x < width; ++x)
            w.set_tau(at(n, x), at(n + 1, x));
    return w;
}

TranslationQuiver zb_quotient(const DirectedTree& b, int k)
{
    if (k < 1)
        throw Error("zb_quotient: k must be positive");
    b.check();
    TranslationQuiver w;
    for (int n = 0; n < k; ++n)
        for (const auto& x : b.vertices) {
            TqVertex v;
            v.id = zb_id(n, x);
            v.mesh_complete = true;
            w.add_vertex(std::move(v));
        }
    int width = static_cast<int>(b.vertices.size());
    auto at = [&](int n, int x) { return (((n % k) + k) % k) * width + x; };
    for (int n = 0; n < k; ++n)
        for (auto [x, y] : b.arrows) {
            w.bump_arrow(at(n, x), at(n, y));
            w.bump_arrow(at(n, y), at(n - 1, x));
        }
    for (int n = 0; n < k; ++n)
        for (int x = 0; x < width; ++x)
            w.set_tau(at(n, x), at(n + 1, x));
    return w;
}

TreeType tree_type(const TranslationQuiver& window, int base, std::size_t cap)
{
    if (base < 0 || base >= static_cast<int>(window.size()))
        throw Error("tree_type: base vertex out of range");
    for (const auto& a : window.arrows()) {
        if (a.src == a.dst)
            throw Error("not a translation quiver: loop at '" + window.vertex(a.src).id + "'");
        if (a.val > 1)
            throw Error("not a translation quiver: multiple arrow " + window.vertex(a.src).id + " -> " +
                        window.vertex(a.dst).id);
    }
    for (const auto& v : window.vertices())
        if (v.projective || v.ext_injective)
            throw Error("tree_type: window is not stable ('" + v.id + "' is projective or Ext-injective)");

    TreeType out;
    struct Node {
        int vertex;
        int prev;
        std::string id;
    };
    std::vector<Node> nodes;
    nodes.push_back({base, -1, window.vertex(base).id});
    out.tree.add_vertex(nodes[0].id);
    auto right_complete = [&](int v) {
        int t = window.tau_inv(v);
        return t >= 0 && window.vertex(t).mesh_complete;
    };
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int k = todo.front();
        todo.pop();
        Node cur = nodes[k];
        if (!right_complete(cur.vertex))
            out.tree.truncated = true;
        for (auto [w, val] : window.succs(cur.vertex)) {
            (void)val;
            if (cur.prev >= 0 && window.tau(w) == cur.prev)
                continue;
            if (nodes.size() >= cap) {
                out.tree.truncated = true;
                continue;
            }
            Node next{w, cur.vertex, cur.id + ">" + window.vertex(w).id};
            nodes.push_back(next);
            int idx = out.tree.add_vertex(next.id);
            out.tree.add_arrow(k, idx);
            todo.push(idx);
        }
    }
    out.graph = out.tree.underlying();
    out.type = classify(out.graph);
    out.type.boundary_open = out.tree.truncated;
    return out;
}

TranslationQuiver stable_tube(int rank, int height, const std::vector<IntVec>& mouth_dims)
{
    if (rank < 1 || height < 1)
        throw Error("stable_tube: rank and height must be positive");
    if (!mouth_dims.empty() && static_cast<int>(mouth_dims.size()) != rank)
        throw Error("stable_tube: need one mouth dimension vector per quasi-simple");
    TranslationQuiver t;
    auto at = [&](int i, int j) { return (j - 1) * rank + ((i % rank) + rank) % rank; };
    for (int j = 1; j <= height; ++j)
        for (int i = 0; i < rank; ++i) {
            TqVertex v;
            v.id = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            v.mesh_complete = j < height;
            if (!mouth_dims.empty()) {
                IntVec d(mouth_dims[0].size());
                for (int k = 0; k < j; ++k)
                    d = d + mouth_dims[(i + k) % rank];
                Int len = 0;
                for (const auto& x : d)
                    len += x;
                v.dim = d;
                v.length = len;
            }
            t.add_vertex(std::move(v));
        }
    for (int j = 1; j < height; ++j)
        for (int i = 0; i < rank; ++i) {
            t.bump_arrow(at(i, j), at(i, j + 1));
            t.bump_arrow(at(i, j + 1), at(i + 1, j));
        }
    for (int j = 1; j <= height; ++j)
        for (int i = 0; i < rank; ++i)
            t.set_tau(at(i, j), at(i - 1, j));
    return t;
}

namespace {

// Unique sectional predecessor chain ending at x; nullopt if uniqueness fails.
std::optional<std::vector<int>> coray_walk(const TranslationQuiver& g, int x)
{
    std::vector<int> path{x};
    std::size_t limit = g.size() + 1;
    while (path.size() <= limit) {
        int cur = path.back();
        int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
        int count = 0;
        int next = -1;
        for (auto [y, val] : g.preds(cur)) {
            if (prev >= 0 && g.tau(prev) == y)
                continue;
            count += val;
            next = y;
        }
        if (count == 0) {
            if (g.vertex(cur).mesh_complete)
                return std::nullopt;
            return path;
        }
        if (count > 1)
            return std::nullopt;
        if (std::find(path.begin(), path.end(), next) != path.end())
            return path;
        path.push_back(next);
    }
    return path;
}

} // namespace

bool is_coray_vertex(const TranslationQuiver& g, int x)
{
    return coray_walk(g, x).has_value();
}

std::vector<int> coray_of(const TranslationQuiver& g, int x)
{
    auto p = coray_walk(g, x);
    if (!p)
        throw Error("'" + g.vertex(x).id + "' is not a coray vertex");
    return *p;
}

TranslationQuiver coray_insertion(const TranslationQuiver& g, int x, int n)
{
    if (n < 1)
        throw Error("coray_insertion: n must be positive");
    if (x < 0 || x >= static_cast<int>(g.size()))
        throw Error("coray_insertion: vertex out of range");
    std::vector<int> coray = coray_of(g, x);
    int L = static_cast<int>(coray.size());
    if (L < 2)
        throw Error("coray_insertion: window too short to apply the construction");

    // x_i is coray[i-1].
    std::vector<int> pos(g.size(), 0);
    for (int i = 1; i <= L; ++i)
        pos[coray[i - 1]] = i;

    TranslationQuiver out;
    for (const auto& v : g.vertices())
        out.add_vertex(v);
    const std::string& xid = g.vertex(x).id;
    std::map<std::pair<int, int>, int> fresh;
    auto limit = [&](int j) { return L + n - j; };
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= limit(j); ++i) {
            TqVertex v;
            v.id = xid + "@" + std::to_string(i) + "," + std::to_string(j);
            v.label = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            v.ext_injective = j == 1 && i <= n;
            fresh[{i, j}] = out.add_vertex(std::move(v));
        }
    auto node = [&](int i, int j) {
        auto it = fresh.find({i, j});
        return it == fresh.end() ? -1 : it->second;
    };

    for (const auto& a : g.arrows()) {
        int i = pos[a.dst];
        if (i > 0 && !(i < L && a.src == coray[i]))
            out.add_arrow(a.src, node(i, n), a.val);
        else
            out.add_arrow(a.src, a.dst, a.val);
    }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= limit(j); ++i) {
            if (node(i + 1, j) >= 0)
                out.add_arrow(node(i + 1, j), node(i, j));
            if (j < n && node(i + 1, j) >= 0 && node(i, j + 1) >= 0)
                out.add_arrow(node(i, j + 1), node(i + 1, j));
        }
    for (int i = 1; i <= L; ++i)
        if (node(n + i - 1, 1) >= 0)
            out.add_arrow(node(n + i - 1, 1), coray[i - 1]);

    for (std::size_t v = 0; v < g.size(); ++v) {
        int vi = static_cast<int>(v);
        if (pos[v] == 0 && g.tau(vi) >= 0)
            out.set_tau(vi, g.tau(vi));
    }
    for (int i = 1; i <= L; ++i) {
        int xi = coray[i - 1];
        auto& vx = out.vertex(xi);
        vx.mesh_complete = i < L;
        vx.left_infinite = false;
        if (node(n + i, 1) >= 0)
            out.set_tau(xi, node(n + i, 1));
        else
            vx.left_infinite = true;
        int last = node(i, n);
        auto& vl = out.vertex(last);
        vl.mesh_complete = i + 1 <= L && g.vertex(xi).mesh_complete && g.tau(xi) >= 0;
        if (g.tau(xi) >= 0)
            out.set_tau(last, g.tau(xi));
        else
            vl.left_infinite = g.vertex(xi).left_infinite;
    }
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= limit(j); ++i) {
            auto& v = out.vertex(node(i, j));
            if (i <= limit(j) - 1) {
                v.mesh_complete = true;
                out.set_tau(node(i, j), node(i, j + 1));
            } else {
                v.left_infinite = true;
            }
        }
    return out;
}

TranslationQuiver ray_insertion(const TranslationQuiver& g, int x, int n)
{
    return coray_insertion(g.opposite(), x, n).opposite();
}

namespace {

std::optional<int> common_period(const TranslationQuiver& w)
{
    int period = -1;
    for (std::size_t v = 0; v < w.size(); ++v) {
        int len = 0;
        int cur = static_cast<int>(v);
        do {
            cur = w.tau(cur);
            ++len;
        } while (cur >= 0 && cur != static_cast<int>(v) && len <= static_cast<int>(w.size()));
        if (cur != static_cast<int>(v))
            return std::nullopt;
        if (period >= 0 && period != len)
            return std::nullopt;
        period = len;
    }
    if (period < 0)
        return std::nullopt;
    return period;
}

} // namespace

std::optional<TubeParams> recognize_tube(const TranslationQuiver& window)
{
    if (window.empty())
        return std::nullopt;
    bool stable = std::none_of(window.vertices().begin(), window.vertices().end(),
                               [](const TqVertex& v) { return v.projective || v.ext_injective; });
    int n_vertices = static_cast<int>(window.size());
    if (stable) {
        auto r = common_period(window);
        if (!r || n_vertices % *r != 0)
            return std::nullopt;
        if (find_isomorphism(window, stable_tube(*r, n_vertices / *r)))
            return TubeParams{*r, {}};
        return std::nullopt;
    }
    bool any_projective = std::any_of(window.vertices().begin(), window.vertices().end(),
                                      [](const TqVertex& v) { return v.projective; });
    if (any_projective)
        return std::nullopt;
    int s = static_cast<int>(std::count_if(window.vertices().begin(), window.vertices().end(),
                                           [](const TqVertex& v) { return v.ext_injective; }));
    int fresh = s * (s - 1) / 2;
    for (int r = 1; r <= n_vertices; ++r) {
        int rest = n_vertices - fresh;
        if (rest <= 0 || rest % (r + s) != 0)
            continue;
        int h = rest / (r + s);
        if (h < 2)
            continue;
        TranslationQuiver tube = stable_tube(r, h);
        TranslationQuiver candidate = coray_insertion(tube, tube.index("(0,1)"), s);
        if (find_isomorphism(window, candidate))
            return TubeParams{r, {s}};
    }
    return std::nullopt;
}

} // namespace arqkit
