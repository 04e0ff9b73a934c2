// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include "cli_runner.hpp"
#include "support.hpp"

#include <functional>
#include <iostream>
#include <map>

using namespace plumbline;
using namespace support;

namespace {

WeightedGraph w(int i)
{
    return load_graph(fixture("w" + std::to_string(i) + ".json"));
}

Diagram pd(const std::string& name)
{
    return load_pd(fixture(name + ".pd"));
}

struct Check {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

// Good set, initial count and the exact square-(-|G|) subset, the last
// recomputed by Cramer's rule.
void plumbing_lists(Check& check, int i, std::size_t initial, const std::set<CharVector>& good,
                    const std::set<CharVector>& minimal)
{
    const auto g = w(i);
    const auto q = intersection_form(g);
    const auto n = static_cast<long>(g.size());
    check(initial_vectors(g).size() == initial, "initial count");
    const auto found = good_vectors(g);
    check(found.size() == good.size(), "good count");
    check(as_set(found) == good, "good set");
    std::set<CharVector> at_min;
    for (const auto& k : found) {
        const Rational s = square(g, k);
        check(s == oracle_square(q, k), "square differs from the oracle");
        if (s == -n)
            at_min.insert(k);
    }
    check(at_min == minimal, "square -|G| set");
}

bool c1(Check& check)
{
    plumbing_lists(check, 1, 48, w1_good, w1_square_minus5);
    return true;
}

bool c2(Check& check)
{
    const auto g = w(1);
    const auto q = intersection_form(g);
    std::set<CharVector> at_min;
    for (const auto& k : w1_good) {
        const Rational s = oracle_square(q, k);
        if (s == -5)
            at_min.insert(k);
        else if (s < -5) {
            std::string v;
            for (long x : k)
                v += (v.empty() ? "(" : ",") + std::to_string(x);
            check(false, "K^2 = " + to_string(s) + " < -5 at " + v + ")");
        }
    }
    check(at_min == w1_square_minus5, "K^2 = -5 set");
    const auto d = d_invariants(g);
    std::set<CharVector> d_zero;
    for (const auto& c : d.classes)
        if (*c.d_value == 0)
            for (const auto& m : c.members)
                if (square(g, m) == -5)
                    d_zero.insert(m);
    check(d_zero == w1_square_minus5, "d = 0 set");
    return true;
}

bool c3(Check& check)
{
    const auto g = w(1);
    const auto a = make_enhanced_form(a1_published, g);
    check(load_enhanced_form(fixture("a1.json"), g).matrix == a1_published, "a1 fixture");
    const auto ker = kernel_rational(a.matrix);
    check(ker.size() == 1 && ker[0] == a1_kernel, "kernel");
    check(in_kernel(a1_published, a1_kernel), "oracle kernel check");

    std::set<CharVector> ext;
    for (const auto& k : w1_good)
        if (extends_over_ball(a, k).extends)
            ext.insert(k);
    check(ext == w1_square_minus5, "extenders");

    const auto cong = derive_congruence(a);
    for (const auto& k : initial_vectors(g)) {
        const long lhs = 2 * k[2] + k[3] + k[4];
        check(satisfies(cong, k) == (((lhs % 3) + 3) % 3 == 0), "congruence solution set");
    }
    return true;
}

bool c4(Check& check)
{
    plumbing_lists(check, 2, 96, w2_good, w2_square_minus6);
    const auto r = blowdown_report(w(2), std::nullopt);
    check(r.d_zero.size() == 5, "five d = 0 classes");
    check(r.expected_t == Integer(3), "t = 3");
    check(r.discrepancy, "discrepancy flag");
    return true;
}

bool c5(Check& check)
{
    plumbing_lists(check, 3, 144, w3_good, w3_square_minus6);
    const auto g = w(3);
    const auto a = load_enhanced_form(fixture("a3.json"), g);
    check(a.matrix == a3_published, "a3 fixture");
    const auto ker = kernel_rational(a.matrix);
    check(ker.size() == 1 && ker[0] == a3_kernel, "kernel");
    check(in_kernel(a3_published, a3_kernel), "oracle kernel check");

    std::set<CharVector> ext, accepted;
    const auto cong = derive_congruence(a);
    check(cong.modulus == 5, "modulus 5");
    for (const auto& k : w3_good) {
        if (extends_over_ball(a, k).extends)
            ext.insert(k);
        if (satisfies(cong, k))
            accepted.insert(k);
        const long lhs = 2 * k[2] + k[3] + 3 * k[4] + k[5];
        check(satisfies(cong, k) == (((lhs % 5) + 5) % 5 == 0), "congruence form");
    }
    check(ext == w3_square_minus6, "extenders");
    check(accepted == w3_square_minus6, "congruence on the good set");
    return true;
}

bool c6(Check& check)
{
    plumbing_lists(check, 4, 192, w4_good, w4_square_minus7);
    return true;
}

bool c7(Check& check)
{
    const std::vector<long> h{9, 9, 25, 9}, t{3, 3, 5, 3};
    for (int i = 1; i <= 4; ++i) {
        const auto g = w(i);
        check(h1_order(g) == h[i - 1], "h1_order W" + std::to_string(i));
        check(abs(oracle_det(intersection_form(g))) == h[i - 1], "oracle det W" + std::to_string(i));
        check(expected_extension_count(h1_order(g)) == t[i - 1], "t W" + std::to_string(i));
        check(lspace_verdict(g).lspace, "L-space W" + std::to_string(i));
    }
    return true;
}

bool c8(Check& check)
{
    const std::map<std::string, long> dets{{"8_20", 9}, {"9_46", 9},  {"10_137", 25},
                                           {"10_140", 9}, {"5_2", 7}, {"prop1_link", 8}};
    for (const auto& [name, det] : dets) {
        check(knot_determinant(pd(name)) == det, "Goeritz det " + name);
        check(jones(pd(name)).abs_at_minus_one() == det, "Jones det " + name);
    }
    check(resolve(mirror(pd("8_20")), 0, 0) == pd("prop1_link"), "link L from the mirror 8_20");
    check(knot_determinant(pd("trefoil")) == jones(pd("trefoil")).abs_at_minus_one(), "trefoil");
    return true;
}

bool c9(Check& check)
{
    const auto j = jones(pd("8_20"));
    check(j == LaurentPolynomial::from_terms({{1, -1}, {0, 2}, {-1, -1}, {-2, 2}, {-3, -1}, {-4, 1}, {-5, -1}}),
          "J(8_20)");
    check(reduced_rank_bound(j) == 9, "rank bound 9");
    const std::map<std::string, long> dets{{"8_20", 9}, {"9_46", 9}, {"10_137", 25}, {"10_140", 9}};
    for (const auto& [name, det] : dets) {
        const auto d = pd(name);
        const auto t = load_table(fixture(name + ".kh.json"));
        const auto bound = reduced_rank_bound(jones(d));
        check(bound == det, "rank bound " + name);
        check(z2_lspace_verdict(knot_determinant(d), bound, is_hthin(t, signature_gl(d))) == Z2Verdict::confirmed,
              "Z/2 verdict " + name);
    }
    return true;
}

bool c10(Check& check)
{
    const auto c = qa_certificate(mirror(pd("8_20")), 3);
    check(c.has_value(), "certificate found");
    if (c) {
        check(c->kind == QACertificate::Kind::resolution, "root is a resolution");
        check(c->det == 9 && c->det0 == 8 && c->det1 == 1, "root (9, 8, 1)");
        check(validate_certificate(*c).empty(), "re-validates");
    }
    const auto a = qa_certificate(pd("5_2"), 0);
    check(a && a->kind == QACertificate::Kind::alternating, "5_2 alternating leaf");
    return true;
}

bool c11(Check& check)
{
    std::size_t vectors = 0;
    for (int i = 1; i <= 4; ++i) {
        const auto g = w(i);
        const auto q = intersection_form(g);
        for (const auto& k : initial_vectors(g)) {
            ++vectors;
            check(all_endpoint_verdicts(g, k).size() == 1, "push order dependence");
        }
        const auto d = d_invariants(g);
        for (const auto& c : d.classes) {
            CharVector neg = c.representative;
            for (auto& x : neg)
                x = -x;
            std::size_t hits = 0;
            for (const auto& other : d.classes)
                if (same_spinc(q, neg, other.representative)) {
                    ++hits;
                    check(*other.d_value == *c.d_value, "conjugate d differs");
                }
            check(hits == 1, "conjugate class");
        }
    }
    check(vectors == 480, "480 initial vectors");

    const auto single = parse_graph(R"({"vertices":[{"id":"v","weight":-2}]})");
    std::multiset<Rational> ds;
    for (const auto& c : d_invariants(single).classes)
        ds.insert(*c.d_value);
    check(ds == std::multiset<Rational>{Rational(1, 4), Rational(-1, 4)}, "single -2 vertex");

    for (const auto& name : {"trefoil", "5_2", "8_20", "9_46", "10_137", "10_140", "prop1_link"}) {
        const auto d = pd(name);
        check(mirror(mirror(d)) == d, std::string("diagram mirror ") + name);
        check(jones(mirror(d)) == jones(d).inverted(), std::string("Jones mirror ") + name);
    }
    for (const auto& name : {"8_20", "9_46", "10_137", "10_140"}) {
        const auto t = load_table(fixture(std::string(name) + ".kh.json"));
        const auto back = mirror_table(mirror_table(t));
        std::map<std::pair<int, int>, int> a, b;
        for (const auto& gr : t.groups)
            if (gr.rank)
                a[{gr.i, gr.j}] = gr.rank;
        for (const auto& gr : back.groups)
            if (gr.rank)
                b[{gr.i, gr.j}] = gr.rank;
        check(a == b, std::string("Kh mirror ") + name);
    }

    std::vector<IntMatrix> mats{a1_published, a3_published};
    for (int i = 1; i <= 4; ++i)
        mats.push_back(intersection_form(w(i)));
    for (const auto& m : mats) {
        const Integer det = det_exact(m);
        check(Rational(det) == oracle_det(m), "Bareiss vs cofactor");
        const auto snf = smith_normal_form(m);
        check(snf.u * m * snf.v == snf.d, "U M V = D");
        Integer prod = 1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            prod *= snf.d(i, i);
        check(prod == abs(det), "SNF product = |det|");
        const auto ker = kernel_rational(m);
        check(rank(m) + ker.size() == m.cols(), "rank-nullity");
        check(ker.empty() == (det != 0), "kernel vs det");
        for (const auto& v : ker)
            check(in_kernel(m, v), "kernel vector");
    }
    return true;
}

bool c12(Check& check)
{
    const auto a = run_cli("report paper --json --jobs 1");
    const auto b = run_cli("report paper --json --jobs 4");
    const auto c = run_cli("report paper --json --jobs 1");
    const auto d = run_cli("report paper --json --jobs 3");
    check(a.status == 0 && b.status == 0 && c.status == 0 && d.status == 0, "exit status");
    check(!a.out.empty(), "output");
    check(a.out == b.out && a.out == c.out && a.out == d.out, "byte-identical output");
    return true;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<bool(Check&)>>> criteria{
        {"W1 good vectors (9 of 48)", c1},
        {"W1 K^2 = -5 vectors", c2},
        {"A1 kernel, extenders, mod 3 congruence", c3},
        {"W2 good vectors, K^2 = -6 set, 5 vs t = 3 flagged", c4},
        {"W3 good vectors, A3 kernel, mod 5 extenders", c5},
        {"W4 good vectors, K^2 = -7 set", c6},
        {"h = 9, 9, 25, 9; t = 3, 3, 5, 3; all L-spaces", c7},
        {"knot determinants by Goeritz and Jones", c8},
        {"J(8_20), rank bound, Z/2 L-space verdicts", c9},
        {"quasi-alternating certificate for the mirror of 8_20", c10},
        {"property suites", c11},
        {"report determinism", c12},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = check.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!ok) {
            std::cout << " [" << check.failures.front();
            if (check.failures.size() > 1)
                std::cout << " and " << check.failures.size() - 1 << " more";
            std::cout << "]";
        }
        std::cout << '\n';
    }
    return failed == 0 ? 0 : 1;
}
