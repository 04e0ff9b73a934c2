#pragma once

// Tabulated Khovanov homology: thinness, mirror transforms and the rank
// chain that certifies a Z/2 L-space.

#include "plumbline/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plumbline {

struct KhGroup {
    int i = 0; ///< homological grading
    int j = 0; ///< quantum grading
    int rank = 0;
    std::vector<int> torsion; ///< orders of cyclic torsion summands, sorted

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const KhGroup&, const KhGroup&) = default;
};

struct KhTable {
    std::string knot;
    std::optional<int> sigma;
    std::optional<Integer> det;
    std::optional<LaurentPolynomial> jones;
    std::vector<KhGroup> groups;                        ///< sorted by (i, j)
    std::optional<std::vector<KhGroup>> reduced_groups; ///< sorted by (i, j)
    std::string source;
};

/// JSON: {"knot","sigma","det","jones":{"exp":coeff},"groups":[{"i","j","rank","torsion"}],
/// optional "reduced_groups" and "source"}. Throws on duplicate (i, j) or
/// negative ranks.
KhTable ingest_table(const std::string& text);
KhTable load_table(const std::string& path);

/// Every nontrivial group on j - 2i = sigma +- 1.
bool is_hthin(const std::vector<KhGroup>& groups, int sigma);
bool is_hthin(const KhTable& t, int sigma);

/// Free part (i, j) -> (-i, -j); torsion (i, j) -> (1 - i, -j).
std::vector<KhGroup> mirror_groups(const std::vector<KhGroup>& groups);
/// Mirrors the groups, the reduced groups, sigma and the Jones polynomial.
KhTable mirror_table(const KhTable& t);

enum class MirrorInference { mirror_hthin, inconclusive };
const char* to_string(MirrorInference m);

/// A thin slice knot whose torsion sits on j - 2i = -1 has a thin mirror.
MirrorInference hthin_mirror_inference(const KhTable& t, bool slice);

/// Sum of |coefficients| of the Jones polynomial.
Integer reduced_rank_bound(const LaurentPolynomial& j);

enum class Z2Verdict { confirmed, inconclusive };
const char* to_string(Z2Verdict v);

/// det <= rk HF-hat(Z/2) <= rk reduced Kh collapses when det equals the
/// rank bound of a thin knot.
Z2Verdict z2_lspace_verdict(const Integer& det, const Integer& rank_bound, bool hthin);

/// sum (-1)^i rank q^{j/2} over a reduced table.
LaurentPolynomial reduced_euler_characteristic(const std::vector<KhGroup>& reduced);

} // namespace plumbline
