#include <doctest.h>

#include "longknot/gauss_code.hpp"
#include "longknot/operations.hpp"

#include <random>

using namespace longknot;

TEST_CASE("parse the two-arrow code") {
    const LongGaussDiagram d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)");
    REQUIRE(d.arrow_count() == 2);
    const Word expected{{1, Role::Over}, {2, Role::Over}, {1, Role::Under}, {2, Role::Under}};
    CHECK(d.word() == expected);
    CHECK(d.sign(1) == Sign::Positive);
    CHECK(d.sign(2) == Sign::Positive);
}

TEST_CASE("empty code is the long unknot") {
    const LongGaussDiagram d = parse_gauss_code("");
    CHECK(d.empty());
    CHECK(serialize(d) == "");
    CHECK(parse_gauss_code("   ").empty());
}

TEST_CASE("parser accepts whitespace, labels and the unicode minus") {
    const LongGaussDiagram d = parse_gauss_code(" Oa ( + ) Ub(−) Ua(+) Ob(-) ");
    CHECK(serialize(d) == "O1(+)U2(-)U1(+)O2(-)");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_gauss_code("O1(+)U1(-)"), GaussCodeError);   // contradictory signs
    CHECK_THROWS_AS(parse_gauss_code("O1(+)"), GaussCodeError);        // unmatched
    CHECK_THROWS_AS(parse_gauss_code("O1(+)U1(+)O1(+)"), GaussCodeError);
    CHECK_THROWS_AS(parse_gauss_code("O1(+)O1(+)"), GaussCodeError);   // duplicate role
    CHECK_THROWS_AS(parse_gauss_code("X1(+)U1(+)"), GaussCodeError);   // malformed
    CHECK_THROWS_AS(parse_gauss_code("O1(+U1(+)"), GaussCodeError);
    CHECK_THROWS_AS(parse_gauss_code("O1(*)U1(*)"), GaussCodeError);
}

TEST_CASE("serialize renumbers by first occurrence") {
    CHECK(serialize(parse_gauss_code("O7(+)U7(+)")) == "O1(+)U1(+)");
    CHECK(serialize(parse_gauss_code("U9(-)O3(+)O9(-)U3(+)")) == "U1(-)O2(+)O1(-)U2(+)");
}

TEST_CASE("round trip parse(serialize(d)) = renumber(d)") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const LongGaussDiagram d = random_diagram(seed % 12, seed);
        CHECK(parse_gauss_code(serialize(d)) == renumber(d));
    }
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(LongGaussDiagram(Word{{1, Role::Over}}, SignMap{{1, Sign::Positive}}),
                    DiagramError);
    CHECK_THROWS_AS(LongGaussDiagram(Word{{1, Role::Over}, {1, Role::Under}}, SignMap{}),
                    DiagramError);
    CHECK_THROWS_AS(LongGaussDiagram(Word{{1, Role::Over}, {1, Role::Under}},
                                     SignMap{{1, Sign::Positive}, {2, Sign::Positive}}),
                    DiagramError);
}

TEST_CASE("closure") {
    const LongGaussDiagram d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)");
    CHECK(closure(d).word() == d.word());
    CHECK(closure(LongGaussDiagram()).canonical_code().empty());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const LongGaussDiagram r = random_diagram(1 + seed % 8, seed);
        const ClosedGaussDiagram base = closure(r);
        for (std::size_t s = 0; s < r.word().size(); ++s) {
            CHECK(closure(rotate_base_point(r, s)) == base);
        }
    }
}

TEST_CASE("concatenation is an associative monoid with unit the empty diagram") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_diagram(uniform_below(rng, 6), rng);
        const auto b = random_diagram(uniform_below(rng, 6), rng);
        const auto c = random_diagram(uniform_below(rng, 6), rng);
        CHECK(concatenate(a, LongGaussDiagram()) == a);
        CHECK(renumber(concatenate(LongGaussDiagram(), a)) == renumber(a));
        CHECK(concatenate(a, b).word().size() == a.word().size() + b.word().size());
        CHECK(renumber(concatenate(concatenate(a, b), c)) ==
              renumber(concatenate(a, concatenate(b, c))));
    }
}

TEST_CASE("inverse reverses, negates signs and keeps roles") {
    const LongGaussDiagram k = parse_gauss_code("O1(+)U2(-)U1(+)O2(-)");
    CHECK(serialize(inverse(k)) == "O1(+)U2(-)U1(+)O2(-)");
    CHECK(serialize(inverse(parse_gauss_code("O1(+)O2(+)U1(+)U2(+)"))) == "U1(-)U2(-)O1(-)O2(-)");
    CHECK(inverse(LongGaussDiagram()).empty());
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const LongGaussDiagram d = random_diagram(seed % 10, seed);
        CHECK(renumber(inverse(inverse(d))) == renumber(d));
    }
}

TEST_CASE("random diagrams are valid and deterministic") {
    CHECK(random_diagram(0, 5).empty());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const LongGaussDiagram a = random_diagram(7, seed);
        CHECK(a.arrow_count() == 7);
        CHECK(a.word().size() == 14);
        CHECK(a == random_diagram(7, seed));
        CHECK_NOTHROW(validate_components(std::span<const Word>(&a.word(), 1), a.signs()));
    }
    CHECK_FALSE(random_diagram(8, 1) == random_diagram(8, 2));
}

TEST_CASE("uniform_below stays in range and hits every value") {
    std::mt19937_64 rng(3);
    std::array<int, 7> hits{};
    for (int i = 0; i < 7000; ++i) {
        const auto v = uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++hits[v];
    }
    for (int h : hits) CHECK(h > 800);
}

TEST_CASE("link codes") {
    const LinkGaussDiagram l = parse_link_code("U1(+)U2(-)|O2(-)O1(+)|");
    CHECK(l.component_count() == 3);
    CHECK(l.component(2).empty());
    CHECK(serialize(l) == "U1(+)U2(-)|O2(-)O1(+)|");
    CHECK(parse_link_code("").is_knot());
    CHECK_THROWS(parse_link_code("O1(+)|O2(+)"));
}
