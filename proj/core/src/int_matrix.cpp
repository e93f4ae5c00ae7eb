#include "arqkit/int_matrix.hpp"
#include "arqkit/error.hpp"

#include <boost/integer/common_factor.hpp>

#include <sstream>
#include <utility>

namespace arqkit {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = Rational(m(i, j));
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k < a[r].size(); ++k)
                a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        for (long long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const
{
    return IntVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVec IntMatrix::column(std::size_t c) const
{
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw Error("matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix dimension mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const
{
    return *this + (-o);
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix r = *this;
    for (auto& x : r.data_)
        x = -x;
    return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const
{
    if (v.size() != cols_)
        throw Error("matrix-vector dimension mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::pow(unsigned long long k) const
{
    if (!square())
        throw Error("power of a non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out << ' ';
            out << (*this)(i, j);
        }
        out << '\n';
    }
    return out.str();
}

IntVec unit_vector(std::size_t n, std::size_t j)
{
    IntVec v(n);
    v.at(j) = 1;
    return v;
}

IntVec operator+(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw Error("vector length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec operator-(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw Error("vector length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec operator*(const Int& s, const IntVec& v)
{
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

std::string to_string(const IntVec& v, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += v[i].str();
    }
    return s;
}

Int determinant(const IntMatrix& m)
{
    if (!m.square())
        throw Error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m)
{
    RatMatrix a = to_rational(m);
    return rref(a, m.cols()).size();
}

std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m)
{
    if (!m.square())
        throw Error("inverse of a non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m(i, j));
        a[i][n + i] = 1;
    }
    if (rref(a, n).size() != n)
        return std::nullopt;
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m)
{
    auto inv = rational_inverse(m);
    if (!inv)
        return std::nullopt;
    std::size_t n = m.rows();
    IntMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = (*inv)[i][j];
            if (denominator(x) != 1)
                return std::nullopt;
            r(i, j) = numerator(x);
        }
    return r;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& m, const IntVec& b)
{
    if (!m.square() || b.size() != m.rows())
        throw Error("solve: dimension mismatch");
    std::size_t n = m.rows();
    RatMatrix a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(m(i, j));
        a[i][n] = Rational(b[i]);
    }
    if (rref(a, n).size() != n)
        return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n];
    return x;
}

std::vector<IntVec> null_space(const IntMatrix& m)
{
    RatMatrix a = to_rational(m);
    auto pivots = rref(a, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<IntVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][free];
        Int lcm = 1;
        for (const auto& x : v)
            lcm = boost::integer::lcm(lcm, Int(denominator(x)));
        IntVec iv(v.size());
        Int g = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            iv[i] = numerator(Rational(v[i] * lcm));
            g = boost::integer::gcd(g, abs(iv[i]));
        }
        if (g > 1)
            for (auto& x : iv)
                x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

} // namespace arqkit
