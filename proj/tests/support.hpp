#pragma once

// Fixture paths, the vector lists the tests compare against, and small
// independent oracles (cofactor determinants, Cramer's rule) that do not
// share code with the library's elimination routines.

#include "plumbline/report.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace support {

using namespace plumbline;

inline std::string fixture(const std::string& name)
{
    return default_fixture_dir() + "/" + name;
}

inline std::set<CharVector> as_set(const std::vector<CharVector>& v)
{
    return {v.begin(), v.end()};
}

// Good initial vectors.
inline const std::set<CharVector> w1_good{
    {0, 0, 0, 0, 1},  {0, 0, 0, 0, -1}, {2, 0, 0, 0, 1}, {2, 0, 0, 0, -1}, {0, 0, 0, 2, 1},
    {0, 0, 0, 2, -1}, {0, 0, 0, 0, 3},  {0, 0, 2, 0, -1}, {0, 2, 0, 0, -1},
};
inline const std::set<CharVector> w1_square_minus5{{0, 0, 0, 0, 3}, {0, 0, 0, 2, 1}, {0, 0, 2, 0, -1}};

inline const std::set<CharVector> w2_good{
    {0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 3}, {0, 0, 0, 0, 2, -1}, {2, 0, 0, 0, 0, -1},
    {0, 0, 0, 2, 0, -1}, {0, 2, 0, 0, 0, -1}, {2, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 2, 1},
};
inline const std::set<CharVector> w2_square_minus6{
    {0, 0, 0, 0, 0, 3}, {0, 0, 0, 2, 0, -1}, {0, 0, 0, 0, 2, 1}, {0, 2, 0, 0, 0, -1}, {2, 0, 0, 0, 0, 1}};

// The source list for this graph names (0,0,1,2,0,-1) twice and leaves out
// (0,0,1,0,2,-1); the set below has the repeat replaced.
inline const std::set<CharVector> w3_good{
    {0, 0, 1, 0, 0, 1},   {0, 0, 1, 0, 0, -1},  {0, 0, -1, 0, 0, 1}, {0, 0, -1, 0, 0, -1}, {0, 0, 1, 0, 0, 3},
    {0, 0, -1, 0, 0, 3},  {0, 0, 1, 2, 0, 1},   {0, 0, 1, 2, 0, -1}, {0, 0, -1, 2, 0, 1},  {0, 0, -1, 2, 0, -1},
    {0, 0, -1, 2, 0, 3},  {0, 0, -1, 0, 2, 1},  {0, 0, -1, 0, 2, -1}, {0, 0, 1, 0, 2, -1}, {0, 2, -1, 0, 0, 1},
    {0, 2, -1, 0, 0, -1}, {2, 0, 1, 0, 0, 1},   {2, 0, 1, 0, 0, -1}, {2, 0, -1, 0, 0, 1},  {2, 0, -1, 0, 0, -1},
    {2, 0, -1, 2, 0, 1},  {2, 0, -1, 2, 0, -1}, {0, 0, 3, 0, 0, 1},  {0, 0, 3, 0, 0, -1},  {0, 0, -1, 2, 2, -1},
};
inline const std::set<CharVector> w3_square_minus6{
    {0, 0, 1, 0, 0, 3}, {0, 0, -1, 0, 2, 1}, {0, 0, 1, 2, 0, 1}, {0, 0, 3, 0, 0, -1}, {0, 0, -1, 2, 2, -1}};

inline const std::set<CharVector> w4_good{
    {0, 0, 0, 0, 0, 0, 1},  {0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, 3},
    {2, 0, 0, 0, 0, 0, 1},  {2, 0, 0, 0, 0, 0, -1}, {0, 2, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 2, 0, -1}, {0, 0, 0, 0, 0, 2, 1},  {0, 0, 0, 0, 0, 2, -1},
};
inline const std::set<CharVector> w4_square_minus7{{0, 0, 0, 0, 0, 0, 3}, {2, 0, 0, 0, 0, 0, 1}, {0, 2, 0, 0, 0, 0, -1}};

inline const IntMatrix a1_published{{-2, 1, 0, 0, 0, 0},  {1, -2, 1, 0, 1, 0},  {0, 1, -2, 1, 0, 0},
                                    {0, 0, 1, -2, 0, -1}, {0, 1, 0, 0, -3, -2}, {0, 0, 0, -1, -2, -4}};
inline const IntMatrix a3_published{{-2, 1, 0, 0, 0, 0, 0},   {1, -2, 1, 0, 1, 0, 0},  {0, 1, -3, 1, 0, 0, -1},
                                    {0, 0, 1, -2, 0, 0, -1},  {0, 1, 0, 0, -2, 1, 0},  {0, 0, 0, 0, 1, -3, -2},
                                    {0, 0, -1, -1, 0, -2, -5}};
inline const RatVector a1_kernel{-1, -2, Rational(-5, 3), Rational(-4, 3), Rational(-4, 3), 1};
inline const RatVector a3_kernel{-1, -2, Rational(-7, 5), Rational(-6, 5), Rational(-8, 5), Rational(-6, 5), 1};

// ---- oracles -----------------------------------------------------------

/// Cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        const Rational term = m[0][c] * cofactor_det(sub);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

inline std::vector<std::vector<Rational>> dense(const IntMatrix& m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = Rational(m(i, j));
    return out;
}

inline Rational oracle_det(const IntMatrix& m)
{
    return cofactor_det(dense(m));
}

/// Q x = a by Cramer's rule.
inline RatVector cramer_solve(const IntMatrix& q, const CharVector& a)
{
    const auto base = dense(q);
    const Rational det = cofactor_det(base);
    RatVector x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto m = base;
        for (std::size_t r = 0; r < a.size(); ++r)
            m[r][i] = a[r];
        x[i] = cofactor_det(m) / det;
    }
    return x;
}

/// a^T Q^{-1} a without forming the inverse.
inline Rational oracle_square(const IntMatrix& q, const CharVector& a)
{
    const RatVector x = cramer_solve(q, a);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += x[i] * a[i];
    return s;
}

inline bool in_kernel(const IntMatrix& m, const RatVector& v)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += Rational(m(i, j)) * v[j];
        if (s != 0)
            return false;
    }
    return true;
}

} // namespace support
