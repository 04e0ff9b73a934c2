#pragma once

// Exact integer / rational linear algebra. Nothing in here touches floating
// point; every routine works over arbitrary-precision integers or reduced
// fractions of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumbline {

using Integer = boost::multiprecision::cpp_int;
/// Always reduced, denominator > 0 (guaranteed by cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

/// Dense row-major matrix. T is Integer or Rational.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool symmetric() const;

    /// Leading principal block of size n.
    Matrix block(std::size_t n) const;
    /// Drops row and column idx.
    Matrix minor_without(std::size_t idx) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionError("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

template <typename T>
bool Matrix<T>::symmetric() const
{
    if (!square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

template <typename T>
Matrix<T> Matrix<T>::block(std::size_t n) const
{
    if (n > rows_ || n > cols_)
        throw DimensionError("block larger than matrix");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = (*this)(i, j);
    return out;
}

template <typename T>
Matrix<T> Matrix<T>::minor_without(std::size_t idx) const
{
    if (!square() || idx >= rows_)
        throw DimensionError("minor_without: bad index");
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == idx)
            continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == idx)
                continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& m, const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_exact(const IntMatrix& m);

/// Exact inverse over the rationals; throws SingularMatrixError when det = 0.
RatMatrix inverse_rational(const IntMatrix& m);

/// Null-space basis over the rationals, one vector per free column, each
/// scaled so that its last nonzero coordinate is 1.
std::vector<RatVector> kernel_rational(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

struct SmithForm {
    IntMatrix d; ///< diagonal, non-negative, d_i | d_{i+1}
    IntMatrix u; ///< unimodular, rows x rows
    IntMatrix v; ///< unimodular, cols x cols
};

/// U * M * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

/// Integer solution of M x = b, if one exists.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b);

/// Sylvester test on leading principal minors. Throws on non-symmetric input.
bool is_negative_definite(const IntMatrix& m);

/// Signature (n+ - n-) of a symmetric integer matrix, by rational congruence
/// diagonalization.
int signature(const IntMatrix& m);

/// Dot product of a rational vector with an integer vector.
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

/// a^T * M * a for a rational matrix.
Rational quadratic_form(const RatMatrix& m, std::span<const Integer> a);

/// Reads a JSON 2-D integer array.
IntMatrix parse_matrix_json(const std::string& text);

} // namespace plumbline
