#include "plumbline/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace plumbline {

std::string to_string(const Integer& z)
{
    return z.str();
}

std::string to_string(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den == 0)
            throw Error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e))
            throw;
        throw Error("not a rational number: '" + text + "'");
    }
}

template <typename T>
static Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions differ");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    return multiply(a, b);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    return multiply(a, b);
}

IntVector operator*(const IntMatrix& m, const IntVector& v)
{
    if (m.cols() != v.size())
        throw DimensionError("matrix-vector product: size mismatch");
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rational(m(i, j));
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

Integer det_exact(const IntMatrix& m)
{
    if (!m.square())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev; // exact division
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(row, j), a(p, j));
        const Rational inv = 1 / a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RatMatrix inverse_rational(const IntMatrix& m)
{
    if (!m.square())
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = Rational(m(i, j));
        aug(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw SingularMatrixError("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVector> kernel_rational(const IntMatrix& m)
{
    RatMatrix a = to_rational(m);
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a(r, free);
        auto last = std::find_if(v.rbegin(), v.rend(), [](const Rational& x) { return x != 0; });
        const Rational scale = *last;
        for (auto& x : v)
            x /= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const IntMatrix& m)
{
    RatMatrix a = to_rational(m);
    return rref(a).size();
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j)
{
    for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        std::swap(a(r, i), a(r, j));
}

// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f)
{
    for (std::size_t c = 0; c < a.cols(); ++c)
        a(i, c) += f * a(j, c);
}

// col_i += f * col_j
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& f)
{
    for (std::size_t r = 0; r < a.rows(); ++r)
        a(r, i) += f * a(r, j);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                break;
            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                const Integer q = a(i, t) / a(t, t);
                add_row(a, i, t, -q);
                add_row(u, i, t, -q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                const Integer q = a(t, j) / a(t, t);
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(a, t, i, 1);
                        add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c)
                a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c)
                u(t, c) = -u(t, c);
        }
    }
    return {std::move(a), std::move(u), std::move(v)};
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw DimensionError("solve_integral: right-hand side has wrong length");
    const SmithForm snf = smith_normal_form(m);
    const IntVector ub = snf.u * b;
    IntVector y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Integer d = i < m.cols() ? snf.d(i, i) : Integer(0);
        if (d == 0) {
            if (ub[i] != 0)
                return std::nullopt;
            continue;
        }
        if (ub[i] % d != 0)
            return std::nullopt;
        y[i] = ub[i] / d;
    }
    return snf.v * y;
}

bool is_negative_definite(const IntMatrix& m)
{
    if (!m.symmetric())
        throw DimensionError("is_negative_definite: matrix is not symmetric");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        const Integer minor = det_exact(m.block(k));
        const bool want_negative = (k % 2) == 1;
        if (want_negative ? minor >= 0 : minor <= 0)
            return false;
    }
    return true;
}

int signature(const IntMatrix& m)
{
    if (!m.symmetric())
        throw DimensionError("signature: matrix is not symmetric");
    RatMatrix a = to_rational(m);
    const std::size_t n = a.rows();
    int sig = 0;
    auto swap_both = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(a(r, i), a(r, j));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && a(j, j) == 0)
                ++j;
            if (j < n) {
                swap_both(k, j);
            } else {
                j = k + 1;
                while (j < n && a(k, j) == 0)
                    ++j;
                if (j == n)
                    continue; // row k is zero
                // a(k,k) <- a(k,k) + 2 a(k,j) + a(j,j) = 2 a(k,j) != 0
                for (std::size_t c = 0; c < n; ++c)
                    a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    a(r, k) += a(r, j);
            }
        }
        const Rational pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            const Rational f = a(i, k) / pivot;
            for (std::size_t c = k; c < n; ++c)
                a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r)
                a(r, i) -= f * a(r, k);
        }
        sig += pivot > 0 ? 1 : -1;
    }
    return sig;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b)
{
    if (a.size() != b.size())
        throw DimensionError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational quadratic_form(const RatMatrix& m, std::span<const Integer> a)
{
    if (!m.square() || m.rows() != a.size())
        throw DimensionError("quadratic_form: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            row += m(i, j) * a[j];
        s += row * a[i];
    }
    return s;
}

IntMatrix parse_matrix_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("matrix file: ") + e.what());
    }
    if (!j.is_array())
        throw Error("matrix file: expected a 2-D array");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error("matrix file: ragged or malformed row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer())
                throw Error("matrix file: non-integer entry");
            m(i, c) = j[i][c].get<long long>();
        }
    }
    return m;
}

} // namespace plumbline
