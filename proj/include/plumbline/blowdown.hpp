#pragma once

// Which spin^c structures of a plumbing boundary can extend over a rational
// homology ball: the d = 0 filter, the enhanced-form kernel test, and the
// h = s t^2 count.

#include "plumbline/charvec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plumbline {

/// Intersection matrix after adjoining handles to the plumbing. The first n
/// coordinates are the plumbing vertices, the rest are handles.
struct EnhancedForm {
    IntMatrix matrix;
    std::size_t n = 0;

    std::size_t handle_count() const { return matrix.rows() - n; }
};

/// Checks symmetry, that the top-left block equals Q(g), and that the form
/// is degenerate.
EnhancedForm make_enhanced_form(IntMatrix matrix, const WeightedGraph& g);
EnhancedForm load_enhanced_form(const std::string& path, const WeightedGraph& g);

enum class Obstruction { none, non_integral, parity };
const char* to_string(Obstruction o);

struct ExtensionVerdict {
    bool extends = false;
    std::optional<RatVector> completed_values; ///< handle values solving the kernel equations
    Obstruction obstruction = Obstruction::none;
};

/// Solves k . (a, x) = 0 for the handle values x over every kernel vector k.
/// Extends iff x is integral and x_j = A_jj mod 2.
ExtensionVerdict extends_over_ball(const EnhancedForm& a, const CharVector& k);

struct Congruence {
    IntVector coefficients; ///< over the plumbing coordinates
    Integer modulus;        ///< 1 means no condition
};

/// Integrality of the handle value as a single congruence sum c_i a_i = 0
/// (mod N), scaled so the last nonzero coefficient is 1 when invertible.
Congruence derive_congruence(const EnhancedForm& a);
bool satisfies(const Congruence& c, const CharVector& k);
std::string to_string(const Congruence& c);

/// t with h = s t^2. Throws when h/s is not a perfect square.
Integer expected_extension_count(const Integer& h, const Integer& s = 1);

/// Spin^c classes whose correction term vanishes.
std::vector<SpincClass> extension_candidates_by_d(const DInvariants& d);

struct BlowdownReport {
    Integer h;
    bool lspace = false;
    std::size_t bad_count = 0;
    bool negative_definite = false;
    std::vector<CharVector> good;
    std::vector<CharVector> d_zero; ///< maximizing good vector of each d = 0 class
    std::optional<Integer> expected_t;
    bool discrepancy = false; ///< #d_zero differs from t (or t undefined)
    std::optional<std::vector<RatVector>> kernel;
    std::optional<Congruence> congruence;
    std::optional<std::vector<CharVector>> extenders;

    /// Negative definite, one bad vertex, L-space.
    bool hypotheses_hold() const { return negative_definite && bad_count == 1 && lspace; }
};

BlowdownReport blowdown_report(const WeightedGraph& g, const std::optional<EnhancedForm>& a,
                               std::uint64_t budget = default_step_budget, unsigned jobs = 1);

} // namespace plumbline
