#pragma once

// Determinants, signatures, Jones polynomials and quasi-alternating
// certificates of link diagrams.

#include "plumbline/diagram.hpp"
#include "plumbline/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace plumbline {

/// Integer Laurent polynomial in q. Links with an even number of components
/// have half-integral exponents, so terms are keyed by twice the exponent.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    /// From integral exponents.
    static LaurentPolynomial from_terms(const std::map<int, Integer>& exponent_to_coeff);
    /// From keys = 2 * exponent.
    static LaurentPolynomial from_doubled(const std::map<int, Integer>& doubled_to_coeff);

    const std::map<int, Integer>& doubled_terms() const noexcept { return terms_; }
    Integer coefficient_doubled(int doubled_exponent) const;
    bool zero() const noexcept { return terms_.empty(); }
    bool integral_exponents() const;

    /// q -> q^{-1}
    LaurentPolynomial inverted() const;
    /// |P(-1)|, with q^{1/2} = i.
    Integer abs_at_minus_one() const;
    /// Sum of |coefficients|.
    Integer l1_norm() const;

    /// e.g. "-q + 2 - q^-1"; exponents like "q^(1/2)" when half-integral.
    std::string str() const;
    /// Exponent as text: "1", "-2", "3/2".
    static std::string exponent_string(int doubled_exponent);
    static int parse_exponent(const std::string& text);

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    void add(int doubled, const Integer& c);
    std::map<int, Integer> terms_;
};

/// Goeritz matrix on the black regions, with one black region at the
/// unbounded face dropped. Empty when there is at most one black region.
IntMatrix goeritz_matrix(const Diagram& d, const RegionColoring& coloring);

/// |det Goeritz|; 0 for split diagrams, 1 for the crossingless unknot.
Integer knot_determinant(const Diagram& d);

inline constexpr std::size_t default_jones_cap = 16;

/// Kauffman-bracket state sum, writhe-normalized, in q = A^{-4}: the unknot
/// is 1 and the right-handed trefoil is q + q^3 - q^4.
LaurentPolynomial jones(const Diagram& d, std::size_t crossing_cap = default_jones_cap);

/// Gordon-Litherland: signature of the Goeritz form minus the sum of eta
/// over type II crossings. The right-handed trefoil has signature -2.
int signature_gl(const Diagram& d, bool invert_coloring = false);

/// Alternating, non-split and no nugatory crossing.
bool is_reduced_alternating(const Diagram& d);

struct QACertificate {
    enum class Kind { unknot, alternating, resolution };
    Kind kind = Kind::unknot;
    Diagram diagram; ///< the simplified diagram at this node
    Integer det;
    std::size_t crossing = 0;              ///< resolution nodes only
    Integer det0, det1;                    ///< resolution nodes only
    std::shared_ptr<const QACertificate> child0, child1;

    int height() const;
};

const char* to_string(QACertificate::Kind k);

/// Depth-bounded search for a quasi-alternating certificate. At each node
/// the diagram is simplified, base cases are tried, then every crossing
/// whose smoothings have nonzero determinants adding up to the node's;
/// larger |det0 det1| first. No certificate does not mean not QA.
std::optional<QACertificate> qa_certificate(const Diagram& d, int depth_budget,
                                            std::uint64_t move_budget = default_move_budget);

/// Re-checks every node from its stored diagram. Returns an empty string
/// when valid, otherwise a description of the first failure.
std::string validate_certificate(const QACertificate& c,
                                 std::uint64_t move_budget = default_move_budget);

} // namespace plumbline
