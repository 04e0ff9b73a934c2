#include "plumbline/invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace plumbline {

// ---- LaurentPolynomial ----------------------------------------------------

void LaurentPolynomial::add(int doubled, const Integer& c)
{
    if (c == 0)
        return;
    auto& slot = terms_[doubled];
    slot += c;
    if (slot == 0)
        terms_.erase(doubled);
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::map<int, Integer>& exponent_to_coeff)
{
    LaurentPolynomial p;
    for (const auto& [e, c] : exponent_to_coeff)
        p.add(2 * e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_doubled(const std::map<int, Integer>& doubled_to_coeff)
{
    LaurentPolynomial p;
    for (const auto& [e, c] : doubled_to_coeff)
        p.add(e, c);
    return p;
}

Integer LaurentPolynomial::coefficient_doubled(int doubled_exponent) const
{
    auto it = terms_.find(doubled_exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPolynomial::integral_exponents() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first % 2 == 0; });
}

LaurentPolynomial LaurentPolynomial::inverted() const
{
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_)
        p.add(-e, c);
    return p;
}

Integer LaurentPolynomial::abs_at_minus_one() const
{
    Integer re = 0, im = 0;
    for (const auto& [e, c] : terms_) {
        switch (((e % 4) + 4) % 4) {
        case 0: re += c; break;
        case 1: im += c; break;
        case 2: re -= c; break;
        case 3: im -= c; break;
        }
    }
    const Integer norm = re * re + im * im;
    const Integer r = boost::multiprecision::sqrt(norm);
    if (r * r != norm)
        throw Error("|P(-1)| is not an integer");
    return r;
}

Integer LaurentPolynomial::l1_norm() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += abs(c);
    return s;
}

std::string LaurentPolynomial::exponent_string(int doubled)
{
    if (doubled % 2 == 0)
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

int LaurentPolynomial::parse_exponent(const std::string& text)
{
    const Rational r = parse_rational(text);
    const Rational twice = 2 * r;
    if (boost::multiprecision::denominator(twice) != 1)
        throw Error("exponent '" + text + "' is not a multiple of 1/2");
    return boost::multiprecision::numerator(twice).convert_to<int>();
}

std::string LaurentPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1)
            out += mag.str();
        out += "q";
        if (e == 2)
            continue;
        if (e % 2 == 0)
            out += "^" + std::to_string(e / 2);
        else
            out += "^(" + exponent_string(e) + ")";
    }
    return out;
}

// ---- Goeritz, determinant, signature --------------------------------------

IntMatrix goeritz_matrix(const Diagram& d, const RegionColoring& coloring)
{
    std::vector<std::size_t> black;
    std::vector<std::size_t> index(coloring.regions.size(), SIZE_MAX);
    for (std::size_t r = 0; r < coloring.regions.size(); ++r)
        if (coloring.color[r] == 1) {
            index[r] = black.size();
            black.push_back(r);
        }
    if (black.size() <= 1)
        return IntMatrix(0, 0);

    IntMatrix g(black.size(), black.size());
    for (const auto& cd : coloring.crossings) {
        if (cd.black_a == cd.black_b)
            continue;
        const auto a = index[cd.black_a], b = index[cd.black_b];
        g(a, b) -= cd.eta;
        g(b, a) -= cd.eta;
        g(a, a) += cd.eta;
        g(b, b) += cd.eta;
    }

    // Drop the first black region that is, or touches, the unbounded face.
    std::size_t drop = 0;
    bool found = false;
    for (std::size_t k = 0; k < black.size() && !found; ++k) {
        const auto r = black[k];
        if (r == coloring.unbounded) {
            drop = k;
            found = true;
            break;
        }
        for (std::size_t c = 0; c < d.size() && !found; ++c) {
            bool has_r = false, has_unbounded = false;
            for (int i = 0; i < 4; ++i) {
                const auto q = coloring.region_of({c, i});
                has_r |= q == r;
                has_unbounded |= q == coloring.unbounded;
            }
            if (has_r && has_unbounded) {
                drop = k;
                found = true;
            }
        }
    }
    return g.minor_without(drop);
}

Integer knot_determinant(const Diagram& d)
{
    if (d.size() == 0)
        return d.free_loops() == 1 ? 1 : 0;
    if (is_split_diagram(d))
        return 0;
    return abs(det_exact(goeritz_matrix(d, checkerboard(d))));
}

int signature_gl(const Diagram& d, bool invert_coloring)
{
    const RegionColoring rc = checkerboard(d, invert_coloring);
    int correction = 0;
    for (const auto& cd : rc.crossings)
        if (cd.type_two)
            correction += cd.eta;
    return signature(goeritz_matrix(d, rc)) - correction;
}

// ---- Jones ------------------------------------------------------------------

namespace {

using APoly = std::map<int, Integer>; // exponent of A -> coefficient

APoly multiply(const APoly& a, const APoly& b)
{
    APoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            out[ea + eb] += ca * cb;
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

} // namespace

LaurentPolynomial jones(const Diagram& d, std::size_t crossing_cap)
{
    const std::size_t n = d.size();
    if (n > crossing_cap)
        throw Error("jones: " + std::to_string(n) + " crossings exceeds the cap of " +
                    std::to_string(crossing_cap));

    // counts[a][loops]: states with a A-smoothings and that many loops
    const std::size_t max_loops = 2 * n + static_cast<std::size_t>(d.free_loops()) + 1;
    std::vector<std::vector<Integer>> counts(n + 1, std::vector<Integer>(max_loops + 1));
    std::vector<int> parent(2 * n + 1);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        for (std::size_t l = 0; l <= 2 * n; ++l)
            parent[l] = static_cast<int>(l);
        int classes = static_cast<int>(2 * n);
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[a] = b;
                --classes;
            }
        };
        std::size_t a_count = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const auto& x = d.crossings()[c].arcs;
            if (state >> c & 1) { // A-smoothing
                unite(x[0], x[1]);
                unite(x[2], x[3]);
                ++a_count;
            } else {
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            }
        }
        counts[a_count][static_cast<std::size_t>(classes + d.free_loops())] += 1;
    }

    const APoly delta{{2, -1}, {-2, -1}};
    std::vector<APoly> delta_pow{APoly{{0, 1}}};
    for (std::size_t k = 1; k <= max_loops; ++k)
        delta_pow.push_back(multiply(delta_pow.back(), delta));

    APoly bracket;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t loops = 1; loops <= max_loops; ++loops) {
            if (counts[a][loops] == 0)
                continue;
            const int shift = static_cast<int>(a) - static_cast<int>(n - a);
            for (const auto& [e, c] : delta_pow[loops - 1])
                bracket[e + shift] += counts[a][loops] * c;
        }

    const int w = d.writhe();
    std::map<int, Integer> doubled;
    for (const auto& [e, c] : bracket) {
        if (c == 0)
            continue;
        const int total = e - 3 * w; // times (-1)^w
        if (total % 2 != 0)
            throw Error("jones: odd power of A in normalized bracket");
        doubled[-total / 2] += (w % 2 == 0) ? c : Integer(-c);
    }
    return LaurentPolynomial::from_doubled(doubled);
}

// ---- quasi-alternating search --------------------------------------------

bool is_reduced_alternating(const Diagram& d)
{
    return is_alternating_diagram(d) && !is_split_diagram(d) && !has_nugatory_crossing(d);
}

int QACertificate::height() const
{
    if (kind != Kind::resolution)
        return 0;
    return 1 + std::max(child0->height(), child1->height());
}

const char* to_string(QACertificate::Kind k)
{
    switch (k) {
    case QACertificate::Kind::unknot: return "unknot";
    case QACertificate::Kind::alternating: return "alternating";
    case QACertificate::Kind::resolution: return "resolution";
    }
    return "?";
}

namespace {

class QASearch {
public:
    explicit QASearch(std::uint64_t move_budget) : move_budget_(move_budget) {}

    std::shared_ptr<const QACertificate> run(const Diagram& input, int depth)
    {
        Diagram s = simplify(input, move_budget_);
        if (s.size() == 0) {
            if (s.free_loops() != 1)
                return nullptr;
            auto leaf = std::make_shared<QACertificate>();
            leaf->kind = QACertificate::Kind::unknot;
            leaf->diagram = std::move(s);
            leaf->det = 1;
            return leaf;
        }
        const Integer det = knot_determinant(s);
        if (det == 0)
            return nullptr;
        if (is_reduced_alternating(s)) {
            auto leaf = std::make_shared<QACertificate>();
            leaf->kind = QACertificate::Kind::alternating;
            leaf->diagram = std::move(s);
            leaf->det = det;
            return leaf;
        }
        if (depth <= 0)
            return nullptr;

        const std::string key = s.key();
        auto& memo = memo_[key];
        if (memo.cert && memo.cert->height() <= depth)
            return memo.cert;
        if (memo.failed_depth >= depth)
            return nullptr;

        struct Candidate {
            Integer product;
            std::size_t crossing;
            Integer d0, d1;
            Diagram r0, r1;
        };
        std::vector<Candidate> cands;
        for (std::size_t c = 0; c < s.size(); ++c) {
            Diagram r0 = resolve(s, c, 0);
            Diagram r1 = resolve(s, c, 1);
            const Integer d0 = knot_determinant(r0), d1 = knot_determinant(r1);
            if (d0 != 0 && d1 != 0 && d0 + d1 == det)
                cands.push_back({d0 * d1, c, d0, d1, std::move(r0), std::move(r1)});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.product > b.product; });

        for (const auto& cand : cands) {
            auto c0 = run(cand.r0, depth - 1);
            if (!c0)
                continue;
            auto c1 = run(cand.r1, depth - 1);
            if (!c1)
                continue;
            auto node = std::make_shared<QACertificate>();
            node->kind = QACertificate::Kind::resolution;
            node->diagram = s;
            node->det = det;
            node->crossing = cand.crossing;
            node->det0 = cand.d0;
            node->det1 = cand.d1;
            node->child0 = std::move(c0);
            node->child1 = std::move(c1);
            memo_[key].cert = node;
            return node;
        }
        auto& entry = memo_[key];
        entry.failed_depth = std::max(entry.failed_depth, depth);
        return nullptr;
    }

private:
    struct Entry {
        std::shared_ptr<const QACertificate> cert;
        int failed_depth = -1;
    };
    std::uint64_t move_budget_;
    std::unordered_map<std::string, Entry> memo_;
};

} // namespace

std::optional<QACertificate> qa_certificate(const Diagram& d, int depth_budget, std::uint64_t move_budget)
{
    QASearch search(move_budget);
    auto cert = search.run(d, depth_budget);
    if (!cert)
        return std::nullopt;
    return *cert;
}

std::string validate_certificate(const QACertificate& c, std::uint64_t move_budget)
{
    const Diagram& s = c.diagram;
    switch (c.kind) {
    case QACertificate::Kind::unknot:
        if (s.size() != 0 || s.free_loops() != 1)
            return "unknot leaf is not the crossingless unknot";
        return {};
    case QACertificate::Kind::alternating:
        if (!is_reduced_alternating(s))
            return "alternating leaf is not a reduced, non-split alternating diagram";
        if (knot_determinant(s) != c.det || c.det == 0)
            return "alternating leaf determinant mismatch";
        return {};
    case QACertificate::Kind::resolution:
        break;
    }
    if (!c.child0 || !c.child1)
        return "resolution node without children";
    if (c.crossing >= s.size())
        return "resolution crossing out of range";
    if (knot_determinant(s) != c.det)
        return "node determinant mismatch";
    if (c.det0 == 0 || c.det1 == 0 || c.det0 + c.det1 != c.det)
        return "determinants are not additive with nonzero children";
    const Diagram r0 = simplify(resolve(s, c.crossing, 0), move_budget);
    const Diagram r1 = simplify(resolve(s, c.crossing, 1), move_budget);
    if (knot_determinant(r0) != c.det0 || knot_determinant(r1) != c.det1)
        return "child determinant mismatch";
    if (!(r0 == c.child0->diagram) || !(r1 == c.child1->diagram))
        return "child diagram is not the simplified resolution";
    if (auto e = validate_certificate(*c.child0, move_budget); !e.empty())
        return e;
    return validate_certificate(*c.child1, move_budget);
}

} // namespace plumbline
