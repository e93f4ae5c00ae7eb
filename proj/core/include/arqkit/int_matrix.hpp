#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace arqkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    IntVec column(std::size_t c) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix pow(unsigned long long k) const;

    /// Row-major, one row per line, entries separated by single spaces.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntVec unit_vector(std::size_t n, std::size_t j);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& s, const IntVec& v);
std::string to_string(const IntVec& v, char sep = ',');

Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Exact inverse over the rationals; nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m);

/// Integer inverse; nullopt if singular or not integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

/// Solves m x = b exactly; nullopt if m is singular.
std::optional<std::vector<Rational>> solve(const IntMatrix& m, const IntVec& b);

/// Basis of the rational null space, each vector scaled to a primitive integer vector.
std::vector<IntVec> null_space(const IntMatrix& m);

} // namespace arqkit
