#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace plumbline;
using namespace support;

namespace {

WeightedGraph w(int i)
{
    return load_graph(fixture("w" + std::to_string(i) + ".json"));
}

EnhancedForm a1()
{
    return load_enhanced_form(fixture("a1.json"), w(1));
}

EnhancedForm a3()
{
    return load_enhanced_form(fixture("a3.json"), w(3));
}

// Handle value forced by orthogonality to a single kernel vector.
Rational forced_handle(const RatVector& kernel, const CharVector& a)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += kernel[i] * a[i];
    return -s / kernel.back();
}

std::set<CharVector> d_zero_reps(const WeightedGraph& g)
{
    std::set<CharVector> out;
    for (const auto& c : extension_candidates_by_d(d_invariants(g)))
        out.insert(c.representative);
    return out;
}

} // namespace

TEST_CASE("enhanced form validation")
{
    CHECK(a1().handle_count() == 1);
    CHECK(a1().matrix == a1_published);
    CHECK_THROWS_AS(make_enhanced_form(a1_published, w(3)), Error);
    CHECK_THROWS_AS(make_enhanced_form(intersection_form(w(1)), w(1)), DimensionError);
    IntMatrix asym = a1_published;
    asym(0, 5) = 1;
    CHECK_THROWS_AS(make_enhanced_form(asym, w(1)), Error);
    IntMatrix nondeg = a1_published;
    nondeg(5, 5) = -5;
    CHECK_THROWS_AS(make_enhanced_form(nondeg, w(1)), Error);
}

TEST_CASE("extension_candidates_by_d")
{
    CHECK(d_zero_reps(w(1)) == w1_square_minus5);
    CHECK(d_zero_reps(w(2)).size() == 5);
    CHECK(d_zero_reps(w(2)) == w2_square_minus6);
    CHECK(d_zero_reps(w(4)) == w4_square_minus7);
}

TEST_CASE("extends_over_ball")
{
    const auto v1 = extends_over_ball(a1(), {0, 0, 0, 0, 3});
    CHECK(v1.extends);
    CHECK(v1.completed_values == RatVector{4});
    CHECK(forced_handle(a1_kernel, {0, 0, 0, 0, 3}) == 4);

    const auto v2 = extends_over_ball(a1(), {0, 0, 0, 0, 1});
    CHECK_FALSE(v2.extends);
    CHECK(v2.obstruction == Obstruction::non_integral);
    CHECK(v2.completed_values == RatVector{Rational(4, 3)});
    CHECK(forced_handle(a1_kernel, {0, 0, 0, 0, 1}) == Rational(4, 3));

    const auto v3 = extends_over_ball(a3(), {0, 0, 1, 0, 0, 3});
    CHECK(v3.extends);
    CHECK(v3.completed_values == RatVector{5});
    CHECK(forced_handle(a3_kernel, {0, 0, 1, 0, 0, 3}) == 5);

    CHECK_THROWS_AS(extends_over_ball(a1(), {0, 0, 3}), DimensionError);
}

TEST_CASE("parity obstruction on the handle coordinate")
{
    // kernel (1,1): x = -a. An even a gives an even x against the odd
    // handle diagonal.
    const auto g = parse_graph(R"({"vertices":[{"id":"v","weight":-1}]})");
    const auto e = make_enhanced_form(IntMatrix{{-1, 1}, {1, -1}}, g);
    const auto bad = extends_over_ball(e, {2});
    CHECK_FALSE(bad.extends);
    CHECK(bad.obstruction == Obstruction::parity);
    CHECK(bad.completed_values == RatVector{-2});
    CHECK(extends_over_ball(e, {3}).extends);
}

TEST_CASE("A1: exactly the three d = 0 vectors extend")
{
    std::set<CharVector> ext;
    for (const auto& k : good_vectors(w(1)))
        if (extends_over_ball(a1(), k).extends)
            ext.insert(k);
    CHECK(ext == w1_square_minus5);
}

TEST_CASE("A3: the extenders are the five square -6 vectors")
{
    std::set<CharVector> ext;
    for (const auto& k : good_vectors(w(3)))
        if (extends_over_ball(a3(), k).extends)
            ext.insert(k);
    CHECK(ext == w3_square_minus6);
}

TEST_CASE("derive_congruence")
{
    const auto c1 = derive_congruence(a1());
    CHECK(c1.modulus == 3);
    CHECK(c1.coefficients == IntVector{0, 0, 2, 1, 1});
    const auto c3 = derive_congruence(a3());
    CHECK(c3.modulus == 5);
    CHECK(c3.coefficients == IntVector{0, 0, 2, 1, 3, 1});

    // integral kernel: no condition
    const auto g = parse_graph(R"({"vertices":[{"id":"v","weight":-1}]})");
    const auto trivial = derive_congruence(make_enhanced_form(IntMatrix{{-1, 1}, {1, -1}}, g));
    CHECK(trivial.modulus == 1);
    CHECK(satisfies(trivial, {7}));
}

TEST_CASE("congruence solution sets")
{
    // 2a3 + a4 + a5 = 0 mod 3 over all 48 initial vectors
    const auto c1 = derive_congruence(a1());
    for (const auto& k : initial_vectors(w(1))) {
        const bool eq4 = (2 * k[2] + k[3] + k[4]) % 3 == 0;
        CHECK(satisfies(c1, k) == eq4);
        CHECK(satisfies(c1, k) == (extends_over_ball(a1(), k).obstruction != Obstruction::non_integral));
    }
    const auto c3 = derive_congruence(a3());
    for (const auto& k : initial_vectors(w(3))) {
        const bool expect = (2 * k[2] + k[3] + 3 * k[4] + k[5]) % 5 == 0;
        CHECK(satisfies(c3, k) == expect);
        CHECK(satisfies(c3, k) == (extends_over_ball(a3(), k).obstruction != Obstruction::non_integral));
    }
    std::set<CharVector> accepted;
    for (const auto& k : good_vectors(w(3)))
        if (satisfies(c3, k))
            accepted.insert(k);
    CHECK(accepted == w3_square_minus6);
}

TEST_CASE("every extender has d = 0")
{
    for (auto [g, e] : {std::pair{w(1), a1()}, std::pair{w(3), a3()}}) {
        const auto zero = d_zero_reps(g);
        for (const auto& k : good_vectors(g))
            if (extends_over_ball(e, k).extends)
                CHECK(zero.count(k) == 1);
    }
}

TEST_CASE("expected_extension_count")
{
    CHECK(expected_extension_count(9) == 3);
    CHECK(expected_extension_count(25) == 5);
    CHECK(expected_extension_count(18, 2) == 3);
    CHECK_THROWS_AS(expected_extension_count(12), Error);
}

TEST_CASE("blowdown_report")
{
    const auto r1 = blowdown_report(w(1), a1());
    CHECK(r1.extenders->size() == 3);
    CHECK(*r1.expected_t == 3);
    CHECK_FALSE(r1.discrepancy);
    CHECK(r1.hypotheses_hold());
    CHECK(r1.congruence->modulus == 3);

    const auto r2 = blowdown_report(w(2), std::nullopt);
    CHECK(r2.d_zero.size() == 5);
    CHECK(*r2.expected_t == 3);
    CHECK(r2.discrepancy);
    CHECK_FALSE(r2.extenders.has_value());

    const auto r3 = blowdown_report(w(3), a3());
    CHECK(as_set(*r3.extenders) == w3_square_minus6);
    CHECK(*r3.expected_t == 5);
    CHECK_FALSE(r3.discrepancy);

    const auto r4 = blowdown_report(w(4), std::nullopt);
    CHECK(as_set(r4.d_zero) == w4_square_minus7);
    CHECK_FALSE(r4.discrepancy);
}
