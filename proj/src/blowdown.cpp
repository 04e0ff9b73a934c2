#include "plumbline/blowdown.hpp"

#include <boost/multiprecision/integer.hpp>

namespace plumbline {

EnhancedForm make_enhanced_form(IntMatrix matrix, const WeightedGraph& g)
{
    if (!matrix.symmetric())
        throw Error("enhanced form is not symmetric");
    const std::size_t n = g.size();
    if (matrix.rows() <= n)
        throw DimensionError("enhanced form has no handle coordinates");
    if (matrix.block(n) != intersection_form(g))
        throw Error("enhanced form does not restrict to the intersection form of the graph");
    if (kernel_rational(matrix).empty())
        throw Error("enhanced form is nondegenerate");
    return {std::move(matrix), n};
}

EnhancedForm load_enhanced_form(const std::string& path, const WeightedGraph& g)
{
    return make_enhanced_form(parse_matrix_json(read_file(path)), g);
}

const char* to_string(Obstruction o)
{
    switch (o) {
    case Obstruction::none: return "none";
    case Obstruction::non_integral: return "non-integral";
    case Obstruction::parity: return "parity";
    }
    return "?";
}

ExtensionVerdict extends_over_ball(const EnhancedForm& a, const CharVector& k)
{
    if (k.size() != a.n)
        throw DimensionError("vector length differs from the plumbing size");
    const auto kernel = kernel_rational(a.matrix);
    const std::size_t h = a.handle_count();
    if (kernel.size() != h)
        throw Error("kernel dimension " + std::to_string(kernel.size()) + " differs from handle count " +
                    std::to_string(h));

    // Rows: kernel vectors. Unknowns: handle values.  B x = -c.
    RatMatrix aug(h, h + 1);
    for (std::size_t r = 0; r < h; ++r) {
        Rational c = 0;
        for (std::size_t i = 0; i < a.n; ++i)
            c += kernel[r][i] * k[i];
        for (std::size_t j = 0; j < h; ++j)
            aug(r, j) = kernel[r][a.n + j];
        aug(r, h) = -c;
    }
    // Gauss-Jordan on the small handle system.
    for (std::size_t col = 0; col < h; ++col) {
        std::size_t p = col;
        while (p < h && aug(p, col) == 0)
            ++p;
        if (p == h)
            throw Error("handle values are underdetermined by the kernel");
        for (std::size_t j = 0; j <= h; ++j)
            std::swap(aug(col, j), aug(p, j));
        const Rational inv = 1 / aug(col, col);
        for (std::size_t j = 0; j <= h; ++j)
            aug(col, j) *= inv;
        for (std::size_t r = 0; r < h; ++r) {
            if (r == col || aug(r, col) == 0)
                continue;
            const Rational f = aug(r, col);
            for (std::size_t j = 0; j <= h; ++j)
                aug(r, j) -= f * aug(col, j);
        }
    }

    ExtensionVerdict out;
    RatVector x(h);
    for (std::size_t j = 0; j < h; ++j)
        x[j] = aug(j, h);
    out.completed_values = x;
    for (std::size_t j = 0; j < h; ++j) {
        if (boost::multiprecision::denominator(x[j]) != 1) {
            out.obstruction = Obstruction::non_integral;
            return out;
        }
    }
    for (std::size_t j = 0; j < h; ++j) {
        const Integer xj = boost::multiprecision::numerator(x[j]);
        const Integer diag = a.matrix(a.n + j, a.n + j);
        if ((xj - diag) % 2 != 0) {
            out.obstruction = Obstruction::parity;
            return out;
        }
    }
    out.extends = true;
    return out;
}

Congruence derive_congruence(const EnhancedForm& a)
{
    const auto kernel = kernel_rational(a.matrix);
    if (kernel.size() != 1)
        throw Error("derive_congruence needs a one-dimensional kernel");
    if (a.handle_count() != 1)
        throw Error("derive_congruence needs exactly one handle coordinate");
    const RatVector& kv = kernel.front();
    const Rational last = kv[a.n];
    if (last == 0)
        throw Error("kernel vector vanishes on the handle coordinate");

    // x = -sum (k_i / k_h) a_i; integral iff sum L (k_i/k_h) a_i = 0 mod L.
    RatVector c(a.n);
    Integer modulus = 1;
    for (std::size_t i = 0; i < a.n; ++i) {
        c[i] = kv[i] / last;
        modulus = boost::multiprecision::lcm(modulus, boost::multiprecision::denominator(c[i]));
    }
    Congruence out{IntVector(a.n), modulus};
    for (std::size_t i = 0; i < a.n; ++i) {
        Integer v = boost::multiprecision::numerator(Rational(c[i] * modulus)) % modulus;
        if (v < 0)
            v += modulus;
        out.coefficients[i] = v;
    }
    if (modulus == 1)
        return out;

    // Scale by the inverse of the last nonzero coefficient, if it is a unit.
    for (std::size_t i = a.n; i-- > 0;) {
        if (out.coefficients[i] == 0)
            continue;
        if (boost::multiprecision::gcd(out.coefficients[i], modulus) == 1) {
            Integer inv = 1;
            while ((inv * out.coefficients[i]) % modulus != 1)
                ++inv;
            for (auto& x : out.coefficients)
                x = (x * inv) % modulus;
        }
        break;
    }
    return out;
}

bool satisfies(const Congruence& c, const CharVector& k)
{
    if (k.size() != c.coefficients.size())
        throw DimensionError("congruence length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
        s += c.coefficients[i] * k[i];
    return s % c.modulus == 0;
}

std::string to_string(const Congruence& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
        if (c.coefficients[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (c.coefficients[i] != 1)
            out += c.coefficients[i].str();
        out += "a" + std::to_string(i + 1);
    }
    if (out.empty())
        out = "0";
    return out + " = 0 (mod " + c.modulus.str() + ")";
}

Integer expected_extension_count(const Integer& h, const Integer& s)
{
    if (h <= 0 || s <= 0)
        throw Error("expected_extension_count: arguments must be positive");
    if (h % s != 0)
        throw Error("no rational ball count consistent with h = " + h.str() + ", s = " + s.str());
    const Integer q = h / s;
    const Integer t = boost::multiprecision::sqrt(q);
    if (t * t != q)
        throw Error("no rational ball count consistent with h = " + h.str() + ", s = " + s.str());
    return t;
}

std::vector<SpincClass> extension_candidates_by_d(const DInvariants& d)
{
    std::vector<SpincClass> out;
    for (const auto& c : d.classes)
        if (c.d_value && *c.d_value == 0)
            out.push_back(c);
    return out;
}

BlowdownReport blowdown_report(const WeightedGraph& g, const std::optional<EnhancedForm>& a,
                               std::uint64_t budget, unsigned jobs)
{
    BlowdownReport r;
    const IntMatrix q = intersection_form(g);
    r.negative_definite = is_negative_definite(q);
    r.bad_count = bad_vertices(g).size();
    r.h = h1_order(g);

    const DInvariants dinv = d_invariants(g, budget, jobs);
    r.good = dinv.good;
    r.lspace = r.bad_count <= 1 && Integer(r.good.size()) == r.h;

    const RatMatrix q_inv = inverse_rational(q);
    for (const auto& c : extension_candidates_by_d(dinv)) {
        // the member realizing the maximum
        for (const auto& k : c.members)
            if ((square(q_inv, k) + static_cast<long>(g.size())) / 4 == *c.d_value) {
                r.d_zero.push_back(k);
                break;
            }
    }

    try {
        r.expected_t = expected_extension_count(r.h);
    } catch (const Error&) {
        r.expected_t.reset();
    }
    r.discrepancy = !r.expected_t || Integer(r.d_zero.size()) != *r.expected_t;

    if (a) {
        r.kernel = kernel_rational(a->matrix);
        if (r.kernel->size() == 1 && a->handle_count() == 1)
            r.congruence = derive_congruence(*a);
        std::vector<CharVector> ext;
        for (const auto& k : r.good)
            if (extends_over_ball(*a, k).extends)
                ext.push_back(k);
        if (r.expected_t && Integer(ext.size()) != *r.expected_t)
            r.discrepancy = true;
        r.extenders = std::move(ext);
    }
    return r;
}

} // namespace plumbline
