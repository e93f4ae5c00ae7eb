#include "arqkit/diagrams.hpp"
#include "arqkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

namespace arqkit {

int UndirectedGraph::add_vertex(std::string id)
{
    if (std::find(vertices.begin(), vertices.end(), id) != vertices.end())
        throw Error("duplicate vertex id '" + id + "'");
    vertices.push_back(std::move(id));
    return static_cast<int>(vertices.size()) - 1;
}

void UndirectedGraph::add_edge(int a, int b, int mult)
{
    if (a < 0 || b < 0 || a >= static_cast<int>(size()) || b >= static_cast<int>(size()))
        throw Error("edge endpoint out of range");
    if (mult < 1)
        throw Error("edge multiplicity must be positive");
    if (a > b)
        std::swap(a, b);
    for (auto& e : edges)
        if (e.a == a && e.b == b) {
            e.mult += mult;
            return;
        }
    edges.push_back({a, b, mult});
}

int UndirectedGraph::multiplicity(int a, int b) const
{
    if (a > b)
        std::swap(a, b);
    for (const auto& e : edges)
        if (e.a == a && e.b == b)
            return e.mult;
    return 0;
}

std::vector<int> UndirectedGraph::neighbors(int v) const
{
    std::vector<int> r;
    for (const auto& e : edges) {
        if (e.a == v && e.b != v)
            r.push_back(e.b);
        else if (e.b == v && e.a != v)
            r.push_back(e.a);
    }
    std::sort(r.begin(), r.end());
    return r;
}

bool UndirectedGraph::has_loop() const
{
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.a == e.b; });
}

std::vector<std::vector<int>> UndirectedGraph::components() const
{
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < size(); ++s) {
        if (comp[s] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(static_cast<int>(s));
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool UndirectedGraph::connected() const
{
    return size() > 0 && components().size() == 1;
}

UndirectedGraph UndirectedGraph::induced(const std::vector<int>& keep) const
{
    UndirectedGraph g;
    std::vector<int> map(size(), -1);
    for (int v : keep)
        map.at(v) = g.add_vertex(vertices[v]);
    for (const auto& e : edges)
        if (map[e.a] >= 0 && map[e.b] >= 0)
            g.add_edge(map[e.a], map[e.b], e.mult);
    return g;
}

std::string UndirectedGraph::to_string() const
{
    std::ostringstream out;
    out << "vertices";
    for (const auto& v : vertices)
        out << ' ' << v;
    out << "\nedges";
    for (const auto& e : edges) {
        out << ' ' << vertices[e.a] << '-' << vertices[e.b];
        if (e.mult > 1)
            out << ':' << e.mult;
    }
    out << '\n';
    return out.str();
}

UndirectedGraph parse_graph(std::string_view text)
{
    UndirectedGraph g;
    enum class Section { None, Vertices, Edges } section = Section::None;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (c == ';') {
            section = Section::None;
            ++col;
            ++i;
            continue;
        }
        int tcol = col;
        std::string tok;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ';' &&
               text[i] != '#') {
            tok += text[i++];
            ++col;
        }
        if (tok == "vertices") {
            section = Section::Vertices;
        } else if (tok == "edges") {
            section = Section::Edges;
        } else if (section == Section::Vertices) {
            if (tok.find('-') != std::string::npos || tok.find(':') != std::string::npos)
                throw ParseError("vertex id '" + tok + "' contains '-' or ':'", line, tcol);
            try {
                g.add_vertex(tok);
            } catch (const Error& e) {
                throw ParseError(e.what(), line, tcol);
            }
        } else if (section == Section::Edges) {
            auto dash = tok.find('-');
            if (dash == std::string::npos)
                throw ParseError("malformed edge '" + tok + "', expected a-b or a-b:m", line, tcol);
            auto colon = tok.find(':', dash);
            std::string a = tok.substr(0, dash);
            std::string b = tok.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1);
            int mult = 1;
            if (colon != std::string::npos) {
                std::string m = tok.substr(colon + 1);
                if (m.empty() || !std::all_of(m.begin(), m.end(), [](char d) { return d >= '0' && d <= '9'; }))
                    throw ParseError("malformed multiplicity in '" + tok + "'", line, tcol);
                mult = std::stoi(m);
                if (mult < 1)
                    throw ParseError("multiplicity must be positive", line, tcol);
            }
            auto ia = std::find(g.vertices.begin(), g.vertices.end(), a);
            auto ib = std::find(g.vertices.begin(), g.vertices.end(), b);
            if (ia == g.vertices.end())
                throw ParseError("unknown vertex '" + a + "'", line, tcol);
            if (ib == g.vertices.end())
                throw ParseError("unknown vertex '" + b + "'", line, tcol);
            g.add_edge(static_cast<int>(ia - g.vertices.begin()), static_cast<int>(ib - g.vertices.begin()), mult);
        } else {
            throw ParseError("expected 'vertices' or 'edges', got '" + tok + "'", line, tcol);
        }
    }
    return g;
}

std::string DiagramType::name() const
{
    std::string idx = "(" + std::to_string(n) + ")";
    switch (family) {
    case Family::A: return "A" + idx;
    case Family::D: return "D" + idx;
    case Family::E: return "E" + std::to_string(n);
    case Family::ATilde: return "Ã" + idx;
    case Family::DTilde: return "D̃" + idx;
    case Family::ETilde: return "Ẽ" + std::to_string(n);
    case Family::AInf: return "A∞";
    case Family::DInf: return "D∞";
    case Family::AInfInf: return "A∞∞";
    case Family::Other: return "Other";
    }
    return "Other";
}

std::string DiagramType::describe() const
{
    return boundary_open ? name() + " (boundary open)" : name();
}

namespace {

using Family = DiagramType::Family;

DiagramType tag(Family f, int n = 0)
{
    DiagramType t;
    t.family = f;
    t.n = n;
    return t;
}

// Number of vertices on the arm leaving `center` through `first`, in a tree.
int arm_length(const UndirectedGraph& g, int center, int first)
{
    int len = 1;
    int prev = center;
    int cur = first;
    for (;;) {
        auto nb = g.neighbors(cur);
        if (nb.size() != 2)
            return nb.size() == 1 ? len : -len;
        int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++len;
    }
}

std::vector<int> shortest_path(const UndirectedGraph& g, int from, int to)
{
    std::vector<int> parent(g.size(), -2);
    std::queue<int> q;
    q.push(from);
    parent[from] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to)
            break;
        for (int w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    std::vector<int> path;
    if (parent[to] == -2)
        return path;
    for (int v = to; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> shortest_cycle(const UndirectedGraph& g)
{
    std::vector<int> best;
    for (std::size_t s = 0; s < g.size(); ++s) {
        std::vector<int> dist(g.size(), -1), parent(g.size(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    std::size_t len = static_cast<std::size_t>(dist[v] + dist[w] + 1);
                    if (!best.empty() && len >= best.size())
                        continue;
                    // Walk both branches back to the root; they must meet only at s.
                    std::vector<int> left, right;
                    for (int x = v; x != -1; x = parent[x])
                        left.push_back(x);
                    for (int x = w; x != -1; x = parent[x])
                        right.push_back(x);
                    std::vector<bool> on_left(g.size(), false);
                    for (int x : left)
                        on_left[x] = true;
                    int meet = -1;
                    for (int x : right)
                        if (on_left[x]) {
                            meet = x;
                            break;
                        }
                    if (meet != static_cast<int>(s))
                        continue;
                    std::vector<int> cyc(left.begin(), left.end() - 1);
                    std::reverse(cyc.begin(), cyc.end());
                    cyc.insert(cyc.begin(), static_cast<int>(s));
                    for (int x : right)
                        if (x != static_cast<int>(s))
                            cyc.push_back(x);
                    if (best.empty() || cyc.size() < best.size())
                        best = cyc;
                }
            }
        }
    }
    return best;
}

EuclideanWitness witness_in_component(const UndirectedGraph& g, const std::vector<int>& comp)
{
    EuclideanWitness w;
    UndirectedGraph h = g.induced(comp);
    auto lift = [&](std::vector<int> local) {
        std::vector<int> r;
        for (int v : local)
            r.push_back(comp[v]);
        std::sort(r.begin(), r.end());
        return r;
    };
    for (const auto& e : h.edges)
        if (e.mult >= 2) {
            w.found = true;
            w.vertices = lift({e.a, e.b});
            w.type = tag(Family::ATilde, 1);
            return w;
        }
    auto cyc = shortest_cycle(h);
    if (!cyc.empty()) {
        w.found = true;
        w.type = tag(Family::ATilde, static_cast<int>(cyc.size()) - 1);
        w.vertices = lift(cyc);
        return w;
    }
    std::vector<int> branch;
    for (std::size_t v = 0; v < h.size(); ++v) {
        auto nb = h.neighbors(static_cast<int>(v));
        if (nb.size() >= 4) {
            std::vector<int> local{static_cast<int>(v), nb[0], nb[1], nb[2], nb[3]};
            w.found = true;
            w.type = tag(Family::DTilde, 4);
            w.vertices = lift(local);
            return w;
        }
        if (nb.size() == 3)
            branch.push_back(static_cast<int>(v));
    }
    if (branch.size() >= 2) {
        std::vector<int> best;
        for (std::size_t i = 0; i < branch.size(); ++i)
            for (std::size_t j = i + 1; j < branch.size(); ++j) {
                auto p = shortest_path(h, branch[i], branch[j]);
                if (best.empty() || p.size() < best.size())
                    best = p;
            }
        std::vector<int> local = best;
        for (int end : {best.front(), best.back()}) {
            int added = 0;
            for (int x : h.neighbors(end)) {
                if (std::find(best.begin(), best.end(), x) != best.end())
                    continue;
                if (added < 2) {
                    local.push_back(x);
                    ++added;
                }
            }
        }
        w.found = true;
        w.type = tag(Family::DTilde, static_cast<int>(local.size()) - 1);
        w.vertices = lift(local);
        return w;
    }
    if (branch.size() == 1) {
        int c = branch[0];
        auto nb = h.neighbors(c);
        std::vector<std::pair<int, int>> arms;
        for (int x : nb)
            arms.emplace_back(arm_length(h, c, x), x);
        std::sort(arms.begin(), arms.end());
        int p = arms[0].first, q = arms[1].first, r = arms[2].first;
        std::vector<int> want;
        Family f = Family::ETilde;
        int n = 0;
        if (p >= 2) {
            want = {2, 2, 2};
            n = 6;
        } else if (q >= 3) {
            want = {1, 3, 3};
            n = 7;
        } else if (q == 2 && r >= 5) {
            want = {1, 2, 5};
            n = 8;
        } else {
            return w;
        }
        std::vector<int> local{c};
        for (int k = 0; k < 3; ++k) {
            int prev = c;
            int cur = arms[k].second;
            for (int step = 0; step < want[k]; ++step) {
                local.push_back(cur);
                auto nbs = h.neighbors(cur);
                int next = -1;
                for (int x : nbs)
                    if (x != prev)
                        next = x;
                prev = cur;
                cur = next;
            }
        }
        w.found = true;
        w.type = tag(f, n);
        w.vertices = lift(local);
        return w;
    }
    return w;
}

} // namespace

DiagramType classify(const UndirectedGraph& g)
{
    std::size_t n = g.size();
    if (n == 0 || g.has_loop() || !g.connected())
        return tag(Family::Other);
    for (const auto& e : g.edges) {
        if (e.mult >= 3)
            return tag(Family::Other);
        if (e.mult == 2)
            return n == 2 && g.edges.size() == 1 ? tag(Family::ATilde, 1) : tag(Family::Other);
    }
    std::size_t m = g.edges.size();
    std::vector<int> degree(n, 0);
    for (const auto& e : g.edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    if (m == n) {
        bool cycle = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
        return cycle ? tag(Family::ATilde, static_cast<int>(n) - 1) : tag(Family::Other);
    }
    if (m + 1 != n)
        return tag(Family::Other);
    int max_deg = *std::max_element(degree.begin(), degree.end());
    if (max_deg >= 5)
        return tag(Family::Other);
    if (max_deg == 4)
        return n == 5 ? tag(Family::DTilde, 4) : tag(Family::Other);
    std::vector<int> branch;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 3)
            branch.push_back(static_cast<int>(v));
    if (branch.empty())
        return tag(Family::A, static_cast<int>(n));
    if (branch.size() == 1) {
        int c = branch[0];
        std::vector<int> arms;
        for (int x : g.neighbors(c))
            arms.push_back(arm_length(g, c, x));
        std::sort(arms.begin(), arms.end());
        int p = arms[0], q = arms[1], r = arms[2];
        if (p == 1 && q == 1)
            return tag(Family::D, r + 3);
        if (p == 1 && q == 2 && r >= 2 && r <= 4)
            return tag(Family::E, r + 4);
        if (p == 2 && q == 2 && r == 2)
            return tag(Family::ETilde, 6);
        if (p == 1 && q == 3 && r == 3)
            return tag(Family::ETilde, 7);
        if (p == 1 && q == 2 && r == 5)
            return tag(Family::ETilde, 8);
        return tag(Family::Other);
    }
    if (branch.size() == 2) {
        for (int b : branch) {
            int leaves = 0;
            for (int x : g.neighbors(b))
                if (degree[x] == 1)
                    ++leaves;
            if (leaves != 2)
                return tag(Family::Other);
        }
        return tag(Family::DTilde, static_cast<int>(n) - 1);
    }
    return tag(Family::Other);
}

EuclideanWitness contains_euclidean(const UndirectedGraph& g)
{
    if (g.has_loop())
        throw Error("contains_euclidean: graph has a loop");
    for (const auto& comp : g.components()) {
        auto w = witness_in_component(g, comp);
        if (w.found)
            return w;
    }
    return {};
}

IntMatrix cartan(const UndirectedGraph& g)
{
    std::size_t n = g.size();
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        c(i, i) = 2;
    for (const auto& e : g.edges) {
        if (e.a == e.b) {
            c(e.a, e.a) -= 2 * e.mult;
            continue;
        }
        c(e.a, e.b) -= e.mult;
        c(e.b, e.a) -= e.mult;
    }
    return c;
}

SubadditiveCheck check_subadditive(const UndirectedGraph& g, const std::vector<Rational>& n)
{
    if (n.size() != g.size())
        throw Error("function must assign a value to every vertex");
    IntMatrix c = cartan(g);
    SubadditiveCheck r;
    r.slack.assign(g.size(), Rational(0));
    r.subadditive = true;
    r.additive = true;
    for (std::size_t y = 0; y < g.size(); ++y) {
        for (std::size_t x = 0; x < g.size(); ++x)
            r.slack[y] += Rational(c(x, y)) * n[x];
        if (r.slack[y] < 0)
            r.subadditive = false;
        if (r.slack[y] != 0)
            r.additive = false;
    }
    r.additive = r.additive && r.subadditive;
    return r;
}

IntVec radical_generator(const UndirectedGraph& g)
{
    auto basis = null_space(cartan(g));
    if (basis.size() != 1)
        throw Error("Cartan matrix does not have a one-dimensional null space");
    IntVec h = basis[0];
    bool negative = std::any_of(h.begin(), h.end(), [](const Int& x) { return x < 0; });
    if (negative)
        for (auto& x : h)
            x = -x;
    return h;
}

AdditiveVerdict additive_dynkin_verdict(const UndirectedGraph& g)
{
    if (!g.connected())
        throw Error("additive_dynkin_verdict: graph must be connected");
    AdditiveVerdict v;
    DiagramType t = classify(g);
    if (t.dynkin()) {
        v.has_subadditive_non_additive = true;
        IntVec ones(g.size(), Int(1));
        v.witness = *solve(cartan(g), ones);
        return v;
    }
    if (t.euclidean()) {
        v.certificate_type = t;
        for (std::size_t i = 0; i < g.size(); ++i)
            v.certificate_vertices.push_back(static_cast<int>(i));
        v.radical = radical_generator(g);
        return v;
    }
    auto w = contains_euclidean(g);
    if (!w.found)
        throw Error("additive_dynkin_verdict: no Euclidean subdiagram found in a non-Dynkin graph");
    v.certificate_type = w.type;
    v.certificate_vertices = w.vertices;
    v.radical = radical_generator(g.induced(w.vertices));
    return v;
}

bool positive_definite(const IntMatrix& m)
{
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub(i, j) = m(i, j);
        if (determinant(sub) <= 0)
            return false;
    }
    return true;
}

bool positive_semidefinite(const IntMatrix& m)
{
    std::size_t n = m.rows();
    if (n > 20)
        throw Error("positive_semidefinite: matrix too large for the principal-minor test");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i))
                idx.push_back(i);
        IntMatrix sub(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                sub(i, j) = m(idx[i], idx[j]);
        if (determinant(sub) < 0)
            return false;
    }
    return true;
}

namespace {

UndirectedGraph numbered(int n)
{
    UndirectedGraph g;
    for (int i = 1; i <= n; ++i)
        g.add_vertex(std::to_string(i));
    return g;
}

// Star with arms of the given vertex counts around vertex 0.
UndirectedGraph star(const std::vector<int>& arms)
{
    int total = 1;
    for (int a : arms)
        total += a;
    UndirectedGraph g = numbered(total);
    int next = 1;
    for (int a : arms) {
        int prev = 0;
        for (int k = 0; k < a; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

} // namespace

UndirectedGraph make_diagram(const DiagramType& t)
{
    int n = t.n;
    switch (t.family) {
    case Family::A: {
        if (n < 1)
            break;
        UndirectedGraph g = numbered(n);
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }
    case Family::D:
        if (n < 4)
            break;
        return star({1, 1, n - 3});
    case Family::E:
        if (n < 6 || n > 8)
            break;
        return star({1, 2, n - 4});
    case Family::ATilde: {
        if (n < 1)
            break;
        UndirectedGraph g = numbered(n + 1);
        if (n == 1) {
            g.add_edge(0, 1, 2);
            return g;
        }
        for (int i = 0; i <= n; ++i)
            g.add_edge(i, (i + 1) % (n + 1));
        return g;
    }
    case Family::DTilde: {
        if (n < 4)
            break;
        if (n == 4)
            return star({1, 1, 1, 1});
        int spine = n - 3;
        UndirectedGraph g = numbered(n + 1);
        for (int i = 0; i + 1 < spine; ++i)
            g.add_edge(i, i + 1);
        g.add_edge(0, spine);
        g.add_edge(0, spine + 1);
        g.add_edge(spine - 1, spine + 2);
        g.add_edge(spine - 1, spine + 3);
        return g;
    }
    case Family::ETilde:
        if (n == 6)
            return star({2, 2, 2});
        if (n == 7)
            return star({1, 3, 3});
        if (n == 8)
            return star({1, 2, 5});
        break;
    default:
        break;
    }
    throw Error("no finite diagram for " + t.name());
}

std::vector<std::pair<DiagramType, UndirectedGraph>> diagram_catalog(int max_vertices)
{
    std::vector<std::pair<DiagramType, UndirectedGraph>> out;
    auto push = [&](Family f, int n) {
        DiagramType t = tag(f, n);
        out.emplace_back(t, make_diagram(t));
    };
    for (int n = 1; n <= max_vertices; ++n)
        push(Family::A, n);
    for (int n = 4; n <= max_vertices; ++n)
        push(Family::D, n);
    for (int n = 6; n <= std::min(8, max_vertices); ++n)
        push(Family::E, n);
    for (int n = 1; n + 1 <= max_vertices; ++n)
        push(Family::ATilde, n);
    for (int n = 4; n + 1 <= max_vertices; ++n)
        push(Family::DTilde, n);
    for (int n = 6; n <= 8 && n + 1 <= max_vertices; ++n)
        push(Family::ETilde, n);
    return out;
}

} // namespace arqkit
