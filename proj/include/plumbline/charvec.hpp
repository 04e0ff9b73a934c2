#pragma once

// Characteristic vectors of a plumbing, the push algorithm that sorts them
// into good and dead initial vectors, spin^c classes and correction terms.

#include "plumbline/linalg.hpp"
#include "plumbline/plumbing.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace plumbline {

/// Dual coordinates a_i = <K, v_i>.
using CharVector = std::vector<long>;

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedGraph : public Error {
public:
    using Error::Error;
};

inline constexpr std::uint64_t default_step_budget = 1'000'000;

/// Every vector with m(v)+2 <= a_v <= -m(v), a_v = m(v) mod 2, in
/// lexicographic order.
std::vector<CharVector> initial_vectors(const WeightedGraph& g);

bool is_characteristic(const WeightedGraph& g, const CharVector& k);

/// K + 2 Q e_v. Requires a_v = -m(v).
CharVector push(const WeightedGraph& g, const CharVector& k, std::size_t v);

enum class Verdict { good, dead, budget_exceeded };
const char* to_string(Verdict v);

struct PathOutcome {
    Verdict verdict = Verdict::dead;
    std::optional<CharVector> terminal;
    std::optional<std::vector<std::size_t>> trace; ///< pushed vertices, in order
    std::uint64_t visits = 0;
};

/// Depth-first search over all push choices starting at k0, memoized on
/// visited vectors. Good as soon as one sequence ends in the terminal box
/// m <= a <= -m-2; dead when every sequence hits a coordinate above -m.
PathOutcome classify_path(const WeightedGraph& g, const CharVector& k0,
                          std::uint64_t budget = default_step_budget, bool want_trace = false);

/// The set of verdicts reached by the end points of all maximal push
/// sequences from k0. A singleton for order-independent inputs.
std::set<Verdict> all_endpoint_verdicts(const WeightedGraph& g, const CharVector& k0,
                                        std::uint64_t budget = default_step_budget);

/// Good initial vectors in initial_vectors order. Work is split across
/// `jobs` threads; the result does not depend on the split. Throws
/// BudgetExceeded if any vector exhausts the budget.
std::vector<CharVector> good_vectors(const WeightedGraph& g,
                                     std::uint64_t budget = default_step_budget,
                                     unsigned jobs = 1);

/// a^T Q^{-1} a.
Rational square(const WeightedGraph& g, const CharVector& k);
Rational square(const RatMatrix& q_inverse, const CharVector& k);

struct SpincClass {
    CharVector representative;
    std::vector<CharVector> members;
    std::optional<Rational> d_value;
};

/// K ~ K' iff (K' - K)/2 lies in the integral image of Q.
bool same_spinc(const IntMatrix& q, const CharVector& a, const CharVector& b);

/// Partition in first-seen order; the representative is the first member.
std::vector<SpincClass> spinc_classes(const WeightedGraph& g, const std::vector<CharVector>& vectors);

struct DInvariants {
    Integer h;
    std::vector<CharVector> good;
    std::vector<SpincClass> classes; ///< d_value always set
    std::size_t unrepresented = 0;   ///< spin^c structures with no good vector
};

/// d = max (K^2 + |G|)/4 over the good vectors of each class. Requires a
/// negative-definite form with at most two bad vertices.
DInvariants d_invariants(const WeightedGraph& g, std::uint64_t budget = default_step_budget,
                         unsigned jobs = 1);

struct LSpaceVerdict {
    bool lspace = false;
    std::size_t good_count = 0;
    Integer h;
    std::size_t bad_count = 0;
};

/// L-space iff #good = h and at most one bad vertex; inconclusive otherwise.
LSpaceVerdict lspace_verdict(const WeightedGraph& g, std::uint64_t budget = default_step_budget,
                             unsigned jobs = 1);

} // namespace plumbline
