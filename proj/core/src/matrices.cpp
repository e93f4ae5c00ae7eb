#include "arqkit/matrices.hpp"
#include "arqkit/error.hpp"
#include "arqkit/tubes.hpp"

#include <algorithm>
#include <map>

namespace arqkit {

IntMatrix projective_dims(const Quiver& q)
{
    return q.path_counts().transpose();
}

IntMatrix injective_dims(const Quiver& q)
{
    return q.path_counts();
}

namespace {

void require_coxeter_input(const Quiver& q)
{
    if (q.has_loop())
        throw Error("quiver has a loop");
    if (!q.acyclic())
        throw Error("quiver has an oriented cycle");
}

} // namespace

CoxeterPair coxeter(const Quiver& q)
{
    require_coxeter_input(q);
    IntMatrix p = projective_dims(q);
    IntMatrix i = injective_dims(q);
    auto i_inv = integer_inverse(i);
    auto p_inv = integer_inverse(p);
    if (!i_inv || !p_inv)
        throw Error("path-count matrix is not unimodular");
    return {-(p * *i_inv), -(i * *p_inv)};
}

IntMatrix inverse_coxeter_combinatorial(const Quiver& q)
{
    require_coxeter_input(q);
    IntMatrix paths = q.path_counts();
    std::size_t n = q.size();
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = -paths(i, j);
            for (const auto& a : q.arrows())
                if (a.src == static_cast<int>(j))
                    v += paths(i, a.dst);
            c(i, j) = v;
        }
    return c;
}

IntMatrix coxeter_combinatorial(const Quiver& q)
{
    require_coxeter_input(q);
    IntMatrix paths = q.path_counts();
    std::size_t n = q.size();
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = -paths(j, i);
            for (const auto& a : q.arrows())
                if (a.dst == static_cast<int>(j))
                    v += paths(a.src, i);
            c(i, j) = v;
        }
    return c;
}

namespace {

class SliceSolver {
public:
    SliceSolver(const TranslationQuiver& w, const std::vector<int>& sigma) : w_(w), sigma_(sigma)
    {
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            if (!pos_.emplace(sigma[j], static_cast<int>(j)).second)
                throw Error("sigma lists vertex '" + w.vertex(sigma[j]).id + "' twice");
        }
        memo_.resize(sigma.size());
        state_.assign(sigma.size(), 0);
    }

    IntVec column(int j)
    {
        if (state_[j] == 2)
            return *memo_[j];
        if (state_[j] == 1)
            throw Error("not a closed slice: cyclic dependency through '" + w_.vertex(sigma_[j]).id + "'");
        state_[j] = 1;
        int x = sigma_[j];
        const auto& vx = w_.vertex(x);
        if (w_.tau(x) < 0 || !vx.mesh_complete)
            throw Error("mesh incomplete at '" + vx.id + "'");
        IntVec r(sigma_.size());
        r[j] = -1;
        for (auto [y, a] : w_.preds(x)) {
            auto in = pos_.find(y);
            if (in != pos_.end()) {
                r[in->second] += a;
                continue;
            }
            int ty = w_.tau_inv(y);
            auto shifted = ty >= 0 ? pos_.find(ty) : pos_.end();
            if (shifted == pos_.end())
                throw Error("not a closed slice: predecessor '" + w_.vertex(y).id + "' of '" + vx.id +
                            "' is neither in sigma nor a translate of it");
            r = r + Int(a) * column(shifted->second);
        }
        memo_[j] = r;
        state_[j] = 2;
        return r;
    }

private:
    const TranslationQuiver& w_;
    const std::vector<int>& sigma_;
    std::map<int, int> pos_;
    std::vector<std::optional<IntVec>> memo_;
    std::vector<int> state_;
};

} // namespace

IntMatrix translation_matrix(const TranslationQuiver& window, const std::vector<int>& sigma, Direction dir)
{
    if (dir == Direction::Right)
        return translation_matrix(window.opposite(), sigma, Direction::Left);
    for (int v : sigma)
        if (v < 0 || v >= static_cast<int>(window.size()))
            throw Error("sigma vertex out of range");
    SliceSolver solver(window, sigma);
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < sigma.size(); ++j)
        cols.push_back(solver.column(static_cast<int>(j)));
    return IntMatrix::from_columns(cols, sigma.size());
}

std::optional<NegativeUnit> check_no_negative_unit(const IntMatrix& m, unsigned long long k_max)
{
    if (!m.square())
        throw Error("check_no_negative_unit: matrix is not square");
    std::size_t n = m.rows();
    IntMatrix p = IntMatrix::identity(n);
    for (unsigned long long k = 1; k <= k_max; ++k) {
        p = p * m;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t nonzero = 0;
            std::size_t at = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (p(i, j) != 0) {
                    ++nonzero;
                    at = i;
                }
            if (nonzero == 1 && p(at, j) == -1)
                return NegativeUnit{k, j + 1, at + 1};
        }
    }
    return std::nullopt;
}

DefectData defect(const Quiver& q, unsigned d_max)
{
    if (!q.acyclic())
        throw Error("defect: quiver has an oriented cycle");
    UndirectedGraph g = q.underlying_graph();
    if (!classify(g).euclidean())
        throw Error("defect: quiver is not of Euclidean type");
    DefectData out;
    out.h = radical_generator(g);
    CoxeterPair cp = coxeter(q);
    std::size_t n = q.size();
    IntMatrix power = IntMatrix::identity(n);
    for (unsigned d = 1; d <= d_max; ++d) {
        power = power * cp.c_inv;
        IntMatrix diff = power - IntMatrix::identity(n);
        IntVec partial(n);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            IntVec col = diff.column(j);
            Int lambda = 0;
            if (col[0] % out.h[0] != 0) {
                ok = false;
                break;
            }
            lambda = col[0] / out.h[0];
            if (col != lambda * out.h)
                ok = false;
            partial[j] = lambda;
        }
        if (ok) {
            out.d = d;
            out.partial = std::move(partial);
            return out;
        }
    }
    throw Error("defect: no d <= " + std::to_string(d_max) + " found");
}

Quiver sigma_quiver(const TranslationQuiver& window, const std::vector<int>& sigma)
{
    Quiver q;
    std::map<int, int> pos;
    for (int v : sigma) {
        pos[v] = q.add_vertex(window.vertex(v).id, window.vertex(v).label);
    }
    int k = 0;
    for (const auto& a : window.arrows()) {
        if (!pos.count(a.src) || !pos.count(a.dst))
            continue;
        for (int c = 0; c < a.val; ++c) {
            std::string id = "a" + std::to_string(++k);
            q.add_arrow(id, window.vertex(a.src).id, window.vertex(a.dst).id);
        }
    }
    return q;
}

namespace {

Int vertex_length(const TqVertex& v)
{
    if (v.length)
        return *v.length;
    if (v.dim) {
        Int s = 0;
        for (const auto& x : *v.dim)
            s += x;
        return s;
    }
    throw Error("no length known for '" + v.id + "'");
}

} // namespace

IntVec tau_coxeter_residual(const TranslationQuiver& window, const std::vector<int>& sigma, const IntVec& m)
{
    if (m.size() != sigma.size())
        throw Error("length vector must have one entry per sigma vertex");
    std::vector<bool> in_sigma(window.size(), false);
    for (int v : sigma)
        in_sigma.at(v) = true;
    IntVec tau_len;
    for (int v : sigma) {
        const auto& x = window.vertex(v);
        if (x.projective)
            throw Error("sigma contains projective vertex '" + x.id + "'");
        if (window.tau(v) < 0 || !x.mesh_complete)
            throw Error("mesh incomplete at '" + x.id + "'");
        int inside = 0;
        for (auto [p, val] : window.preds(v))
            if (in_sigma[p])
                inside += val;
        if (inside > 1)
            throw Error("'" + x.id + "' has more than one immediate predecessor in sigma");
        tau_len.push_back(vertex_length(window.vertex(window.tau(v))));
    }
    Quiver q = sigma_quiver(window, sigma);
    return tau_len - coxeter(q).c_inv * m;
}

std::optional<IntVec> decompose_injective(const Quiver& q, const IntVec& v)
{
    auto x = solve(injective_dims(q), v);
    if (!x)
        return std::nullopt;
    IntVec r;
    for (const auto& c : *x) {
        if (denominator(c) != 1)
            return std::nullopt;
        r.push_back(numerator(c));
    }
    return r;
}

DiagramType parse_family(const std::string& family)
{
    if (family.size() < 2)
        throw Error("unknown family '" + family + "'");
    int n = 0;
    try {
        n = std::stoi(family.substr(1));
    } catch (const std::exception&) {
        throw Error("unknown family '" + family + "'");
    }
    DiagramType t;
    t.n = n;
    switch (family[0]) {
    case 'A': t.family = DiagramType::Family::A; break;
    case 'D': t.family = DiagramType::Family::D; break;
    case 'E': t.family = DiagramType::Family::E; break;
    default: throw Error("unknown family '" + family + "'");
    }
    make_diagram(t);
    return t;
}

Slice dynkin_slice(const DiagramType& t)
{
    int n = t.n;
    DirectedTree b;
    for (int i = 1; i <= n; ++i)
        b.add_vertex("x" + std::to_string(i));
    switch (t.family) {
    case DiagramType::Family::A:
        for (int i = 1; i < n; ++i)
            b.add_arrow(i, i - 1);
        break;
    case DiagramType::Family::D:
        if (n < 4)
            throw Error("D_n needs n >= 4");
        for (int i = 1; i < n - 2; ++i)
            b.add_arrow(i, i - 1);
        b.add_arrow(0, n - 2);
        b.add_arrow(0, n - 1);
        break;
    case DiagramType::Family::E:
        if (n < 6 || n > 8)
            throw Error("E_n needs 6 <= n <= 8");
        for (int i = 1; i < n - 3; ++i)
            b.add_arrow(i, i - 1);
        b.add_arrow(0, n - 3);
        b.add_arrow(0, n - 2);
        b.add_arrow(n - 2, n - 1);
        break;
    default:
        throw Error("dynkin_slice: not a Dynkin type");
    }
    Slice s{zb_window(b, 0, 1), {}};
    for (const auto& x : b.vertices)
        s.sigma.push_back(s.window.index("(0," + x + ")"));
    return s;
}

std::vector<IdentityCheck> identity_checks(const std::string& family)
{
    DiagramType t = parse_family(family);
    Slice s = dynkin_slice(t);
    IntMatrix m = translation_matrix(s.window, s.sigma);
    std::size_t n = static_cast<std::size_t>(t.n);
    std::string sub = "M_" + std::to_string(n);
    std::vector<IdentityCheck> out;
    IntMatrix minus_id = -IntMatrix::identity(n);
    switch (t.family) {
    case DiagramType::Family::A:
        out.push_back({sub + " e_" + std::to_string(n) + " = -e_1",
                       m * unit_vector(n, n - 1) == IntVec(-1 * unit_vector(n, 0))});
        break;
    case DiagramType::Family::D: {
        IntMatrix p = m.pow(n - 1);
        if (n % 2 == 0) {
            out.push_back({sub + "^" + std::to_string(n - 1) + " = -Id", p == minus_id});
        } else {
            IntMatrix expect = minus_id;
            expect(n - 2, n - 2) = 0;
            expect(n - 1, n - 1) = 0;
            expect(n - 2, n - 1) = -1;
            expect(n - 1, n - 2) = -1;
            out.push_back({sub + "^" + std::to_string(n - 1) + " = -Id with last two coordinates swapped",
                           p == expect});
        }
        break;
    }
    case DiagramType::Family::E:
        if (n == 6)
            out.push_back({"M_6^6 e_1 = -e_1", m.pow(6) * unit_vector(6, 0) == IntVec(-1 * unit_vector(6, 0))});
        else if (n == 7)
            out.push_back({"M_7^9 = -Id", m.pow(9) == minus_id});
        else
            out.push_back({"M_8^15 = -Id", m.pow(15) == minus_id});
        break;
    default:
        break;
    }
    return out;
}

} // namespace arqkit
