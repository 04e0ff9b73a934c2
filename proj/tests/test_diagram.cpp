#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <map>

using namespace plumbline;
using namespace support;

namespace {

Diagram pd(const std::string& name)
{
    return load_pd(fixture(name + ".pd"));
}

const std::vector<std::string> knot_fixtures{"trefoil", "5_2", "8_20", "9_46", "10_137", "10_140", "prop1_link"};

bool labels_twice(const Diagram& d)
{
    std::map<int, int> count;
    for (const auto& x : d.crossings())
        for (int a : x.arcs)
            ++count[a];
    for (const auto& [label, n] : count)
        if (n != 2 || label < 1 || label > static_cast<int>(2 * d.size()))
            return false;
    return count.size() == 2 * d.size();
}

} // namespace

TEST_CASE("parse_pd")
{
    const auto d = pd("8_20");
    CHECK(d.size() == 8);
    CHECK(d.components() == 1);
    CHECK(d.free_loops() == 0);

    const auto u = parse_pd("", true);
    CHECK(u.size() == 0);
    CHECK(u.free_loops() == 1);
    CHECK(parse_pd("# nothing here\n", true) == Diagram::unknot());
    CHECK_THROWS_AS(parse_pd(""), DiagramError);

    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), DiagramError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), DiagramError);
    CHECK_THROWS_AS(parse_pd("X(1,5,2,4) Y(3,1,4,6)"), DiagramError);
    CHECK_THROWS_AS(parse_pd("X(1,a,2,4)"), DiagramError);
}

TEST_CASE("parse_pd accepts equivalent notations")
{
    const auto a = parse_pd("X(1,5,2,4)\nX(3,1,4,6)\nX(5,3,6,2)\n");
    const auto b = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]");
    const auto c = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]  # trefoil");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == pd("trefoil"));
}

TEST_CASE("over-strand directions and signs")
{
    // right-handed trefoil: all crossings positive
    CHECK(pd("trefoil").writhe() == 3);
    for (const auto& x : pd("trefoil").crossings())
        CHECK(x.sign() == 1);
    for (const auto& name : knot_fixtures)
        CHECK(labels_twice(pd(name)));
}

TEST_CASE("to_pd round trip")
{
    for (const auto& name : knot_fixtures) {
        const auto d = pd(name);
        CHECK(parse_pd(to_pd(d)) == d);
    }
}

TEST_CASE("mirror")
{
    for (const auto& name : knot_fixtures) {
        const auto d = pd(name);
        CHECK(mirror(mirror(d)) == d);
        CHECK(mirror(d).writhe() == -d.writhe());
        CHECK(mirror(d).size() == d.size());
    }
    CHECK(mirror(Diagram::unknot()) == Diagram::unknot());
}

TEST_CASE("resolve")
{
    const auto m = mirror(pd("8_20"));
    const auto one = resolve(m, 0, 1);
    CHECK(one.size() == 7);
    const auto s = simplify(one);
    CHECK(s.size() == 0);
    CHECK(s.free_loops() == 1);

    const auto zero = resolve(m, 0, 0);
    CHECK(zero.components() == 2);
    CHECK(zero == pd("prop1_link"));

    // one-crossing kink: the smoothings give one loop and two loops
    const auto kink = parse_pd("X(1,1,2,2)");
    CHECK(kink.components() == 1);
    std::multiset<int> loops{resolve(kink, 0, 0).free_loops(), resolve(kink, 0, 1).free_loops()};
    CHECK(loops == std::multiset<int>{1, 2});
    CHECK(resolve(kink, 0, 0).size() == 0);

    CHECK_THROWS_AS(resolve(m, 8, 0), DiagramError);
    CHECK_THROWS_AS(resolve(m, 0, 2), DiagramError);

    for (const auto& name : knot_fixtures) {
        const auto d = pd(name);
        for (std::size_t c = 0; c < d.size(); ++c)
            for (int k = 0; k < 2; ++k) {
                const auto r = resolve(d, c, k);
                CHECK(labels_twice(r));
                CHECK(r.size() == d.size() - 1);
            }
    }
}

TEST_CASE("is_alternating_diagram")
{
    CHECK(is_alternating_diagram(pd("5_2")));
    CHECK(is_alternating_diagram(pd("trefoil")));
    CHECK_FALSE(is_alternating_diagram(pd("8_20")));
    CHECK(is_alternating_diagram(Diagram::unknot()));
}

TEST_CASE("is_split_diagram")
{
    CHECK(is_split_diagram(Diagram({}, 2)));
    CHECK_FALSE(is_split_diagram(pd("8_20")));
    CHECK_FALSE(is_split_diagram(pd("prop1_link")));
    CHECK_FALSE(is_split_diagram(Diagram::unknot()));
    // smoothing a kink into two disjoint loops
    CHECK(is_split_diagram(resolve(parse_pd("X(1,1,2,2)"), 0, 1)));
}

TEST_CASE("simplify")
{
    const auto kink = simplify(parse_pd("X(1,1,2,2)"));
    CHECK(kink == Diagram::unknot());

    // two loops overlapping in a clasp, one over the other at both crossings
    const auto clasp = parse_pd("X(1,3,2,4) X(2,3,1,4)");
    CHECK(clasp.components() == 2);
    const auto s = simplify(clasp);
    CHECK(s.size() == 0);
    CHECK(s.free_loops() == 2);

    for (const auto& name : knot_fixtures) {
        const auto d = pd(name);
        const auto t = simplify(d);
        CHECK(t.size() <= d.size());
        CHECK(labels_twice(t));
    }
    CHECK(simplify(pd("8_20")) == pd("8_20"));
    CHECK(simplify(parse_pd("X(1,1,2,2)"), 0).size() == 1);
}

TEST_CASE("has_nugatory_crossing")
{
    CHECK(has_nugatory_crossing(parse_pd("X(1,1,2,2)")));
    CHECK_FALSE(has_nugatory_crossing(pd("5_2")));
    CHECK_FALSE(has_nugatory_crossing(pd("trefoil")));
}

TEST_CASE("checkerboard")
{
    const auto u = checkerboard(Diagram::unknot());
    CHECK(u.regions.size() == 2);

    CHECK(checkerboard(pd("8_20")).regions.size() == 10);

    // Trefoil faces: two triangles and three bigons. The unbounded face is a
    // triangle and white, so the three bigons are black.
    const auto t = checkerboard(pd("trefoil"));
    CHECK(t.regions.size() == 5);
    CHECK(t.black_count() == 3);
    CHECK(t.color[t.unbounded] == 0);
    CHECK(checkerboard(pd("trefoil"), true).black_count() == 2);

    CHECK_THROWS_AS(checkerboard(Diagram({}, 2)), DiagramError);
    CHECK_THROWS_AS(checkerboard(resolve(parse_pd("X(1,1,2,2)"), 0, 1)), DiagramError);
}

TEST_CASE("checkerboard: Euler count and proper coloring")
{
    for (const auto& name : knot_fixtures)
        for (bool invert : {false, true}) {
            const auto d = pd(name);
            const auto rc = checkerboard(d, invert);
            CHECK(rc.regions.size() == d.size() + 2);
            for (std::size_t c = 0; c < d.size(); ++c)
                for (int i = 0; i < 4; ++i)
                    CHECK(rc.color[rc.region_of({c, i})] != rc.color[rc.region_of({c, (i + 1) % 4})]);
        }
}
