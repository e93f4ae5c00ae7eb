#pragma once

#include "arqkit/int_matrix.hpp"
#include "arqkit/quiver.hpp"
#include "arqkit/translation_quiver.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace arqkit::testing {

inline std::string fixture_path(const std::string& name) { return std::string(ARQKIT_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline TranslationQuiver load_ar(const std::string& name) { return parse_ar_quiver(read_fixture(name)); }
inline Quiver load_quiver(const std::string& name) { return parse_quiver(read_fixture(name)); }

/// splitmix64
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin(int percent) { return below(100) < percent; }

private:
    std::uint64_t state_;
};

/// Acyclic loop-free quiver: arrows only go from a lower to a higher position of a random order.
inline Quiver random_acyclic_quiver(Rng& rng, int max_vertices, int max_mult = 2)
{
    int n = rng.between(1, max_vertices);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);
    Quiver q;
    for (int i = 0; i < n; ++i)
        q.add_vertex(std::to_string(i + 1));
    int a = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin(35)) {
                int mult = rng.coin(15) ? rng.between(2, max_mult) : 1;
                for (int k = 0; k < mult; ++k)
                    q.add_arrow("a" + std::to_string(++a), std::to_string(order[i] + 1), std::to_string(order[j] + 1));
            }
    return q;
}

/// Determinant by cofactor expansion; independent of the library's elimination.
inline Int laplace_det(const std::vector<std::vector<Int>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Int term = m[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : Int(-term);
    }
    return det;
}

inline std::vector<std::vector<Int>> principal(const IntMatrix& m, const std::vector<std::size_t>& idx)
{
    std::vector<std::vector<Int>> out(idx.size(), std::vector<Int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out[i][j] = m(idx[i], idx[j]);
    return out;
}

/// Sylvester: all leading principal minors positive.
inline bool oracle_positive_definite(const IntMatrix& m)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        idx.push_back(k);
        if (laplace_det(principal(m, idx)) <= 0)
            return false;
    }
    return true;
}

/// Naive product with plain loops.
inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline IntVec ivec(std::initializer_list<long long> xs)
{
    IntVec v;
    for (long long x : xs)
        v.push_back(x);
    return v;
}

} // namespace arqkit::testing
