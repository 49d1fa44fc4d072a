#include <doctest.h>

#include "naive_oracle.hpp"

#include "longknot/conway.hpp"
#include "longknot/gauss_code.hpp"
#include "longknot/invariants.hpp"
#include "longknot/knot_table.hpp"
#include "longknot/operations.hpp"

#include <random>

using namespace longknot;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("subdiagram counts match binomial coefficients") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const LongGaussDiagram d = random_diagram(seed % 9, seed);
        const std::size_t n = d.arrow_count();
        for (std::size_t k = 0; k <= n; ++k) {
            const auto subs = subdiagrams(d, k);
            CHECK(subs.size() == binomial(n, k));
            for (const auto& s : subs) CHECK(s.arrow_count() == k);
        }
        CHECK(subdiagrams(d, 0).front().empty());
        CHECK(subdiagrams(d, n).front() == d);
    }
    CHECK_THROWS(subdiagrams(random_diagram(3, 1), 4));
}

TEST_CASE("single-arrow pairing is the sign") {
    const ArrowPattern arrow = ArrowPattern::unsigned_pattern("O1U1");
    CHECK(pairing(arrow, parse_gauss_code("O1(+)U1(+)")) == 1);
    CHECK(pairing(arrow, parse_gauss_code("O1(-)U1(-)")) == -1);
    CHECK(pairing(arrow, LongGaussDiagram()) == 0);
    CHECK(pairing(v21_pattern(), LongGaussDiagram()) == 0);
}

TEST_CASE("pairing agrees with the brute-force subset oracle") {
    const std::vector<std::string> words{"O1U1",     "U1O1",         "O1U2U1O2",   "U1O2O1U2",
                                         "O1O2U1U2", "O1U1O2U2",     "O1U2O2U1",   "U1U2O1O2",
                                         "O1U2O3U1O2U3", "O1O2U3U1O3U2", "U1O2U2O3U3O1"};
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        const LongGaussDiagram d = random_diagram(uniform_below(rng, 9), rng);
        for (const std::string& w : words) {
            INFO(w << " on " << serialize(d));
            CHECK(pairing(ArrowPattern::unsigned_pattern(w), d) == oracle::naive_pairing(w, d));
        }
        const LongGaussDiagram signed_pattern = parse_gauss_code("O1(+)U2(-)U1(+)O2(-)");
        CHECK(pairing(ArrowPattern::signed_pattern(signed_pattern), d) ==
              oracle::naive_pairing("O1U2U1O2", d, std::string("+-")));
    }
}

TEST_CASE("degree-two invariants vanish on small diagrams") {
    CHECK(v21(LongGaussDiagram()) == 0);
    CHECK(v22(LongGaussDiagram()) == 0);
    CHECK(v21(parse_gauss_code("O1(-)U1(-)")) == 0);
    CHECK(v22(parse_gauss_code("U1(+)O1(+)")) == 0);
    CHECK(beta(LongGaussDiagram()) == 0);
}

TEST_CASE("classical calibration: v21 = v22 = c2 and beta = 0") {
    for (const auto& k : knots::table()) {
        if (!k.classical) continue;
        const LongGaussDiagram d = parse_gauss_code(k.code);
        INFO(k.name);
        REQUIRE(is_realizable(closure(d)));
        const auto c2 = conway_c2(d);
        CHECK(v21(d) == c2);
        CHECK(v22(d) == c2);
        CHECK(beta(d) == 0);
    }
    CHECK(conway_c2(knots::right_trefoil()) == 1);
    CHECK(conway_c2(knots::figure_eight()) == -1);
    CHECK(conway_c2(knots::cinquefoil()) == 3);
    CHECK(conway_c2(knots::unknot()) == 0);
}

TEST_CASE("Conway polynomials from the skein oracle") {
    auto poly = [](const LongGaussDiagram& d) {
        return conway_polynomial(ClosedLinkCode{{d.word()}, d.signs()});
    };
    LaurentPoly trefoil = LaurentPoly::monomial(0, 1) + LaurentPoly::monomial(2, 1);
    CHECK(poly(knots::right_trefoil()) == trefoil);
    CHECK(poly(knots::left_trefoil()) == trefoil);
    CHECK(poly(knots::figure_eight()) ==
          LaurentPoly::monomial(0, 1) + LaurentPoly::monomial(2, -1));
    CHECK(poly(knots::cinquefoil()) == LaurentPoly::monomial(0, 1) +
                                           LaurentPoly::monomial(2, 3) +
                                           LaurentPoly::monomial(4, 1));
    // Hopf link: two components, C = z.
    const LinkGaussDiagram hopf = parse_link_code("O1(+)U2(+)|U1(+)O2(+)");
    CHECK(conway_polynomial(ClosedLinkCode{{hopf.component(0), hopf.component(1)}, hopf.signs()}) ==
          LaurentPoly::monomial(1, 1));
    // Two-component unlink.
    CHECK(conway_polynomial(ClosedLinkCode{{Word{}, Word{}}, {}}).is_zero());
}

TEST_CASE("non-planar codes are refused by the c2 oracle") {
    const LongGaussDiagram bad = parse_gauss_code("O1(+)U2(+)O3(-)U4(-)U1(+)O2(+)U3(-)O4(-)");
    CHECK_FALSE(is_realizable(closure(bad)));
    CHECK_THROWS_AS(conway_c2(bad), NotRealizableError);
    CHECK(carter_genus(closure(parse_gauss_code("O1(+)O2(+)U1(+)U2(+)"))) == 1);
}

TEST_CASE("fly values") {
    const LongGaussDiagram f = knots::fly();
    CHECK(v21(f) == 0);
    CHECK(v22(f) == -1);
    CHECK(beta(f) == 1);
}

TEST_CASE("two-arrow code: v21 + v22 under the invariant patterns") {
    // Both arrows point the same way, so neither antiparallel pattern matches.
    const LongGaussDiagram d = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)");
    CHECK(v21(d) + v22(d) == oracle::naive_pairing("O1U2U1O2", d) + oracle::naive_pairing("U1O2O1U2", d));
    CHECK(v21(d) + v22(d) == 0);
}

TEST_CASE("w polynomial") {
    const LongGaussDiagram k = parse_gauss_code("O1(+)O2(+)U1(+)U2(+)");
    CHECK(w_polynomial(k) == LaurentPoly::monomial(1, 2));
    CHECK(w_polynomial(k).to_string() == "2t");
    CHECK(w_polynomial(LongGaussDiagram()).is_zero());
    CHECK(arrow_index(k, 1) == 1);
    CHECK(arrow_index(k, 2) == -1);
    for (unsigned m = 1; m <= 5; ++m) {
        CHECK(w_polynomial(power(k, m)) == LaurentPoly::monomial(1, 2 * static_cast<int>(m)));
    }
    for (const auto& knot : knots::table()) CHECK(w_polynomial(parse_gauss_code(knot.code)).is_zero());
}

TEST_CASE("w is additive and vanishes on K # K^-1") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_diagram(uniform_below(rng, 9), rng);
        const auto b = random_diagram(uniform_below(rng, 9), rng);
        CHECK(w_polynomial(concatenate(a, b)) == w_polynomial(a) + w_polynomial(b));
        CHECK(w_polynomial(concatenate(a, inverse(a))).is_zero());
    }
}

TEST_CASE("report bundles the invariants and beta is v21 + v22 mod 2") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const LongGaussDiagram d = random_diagram(seed % 10, seed);
        const InvariantReport r = report(d);
        CHECK(r.v21 == v21(d));
        CHECK(r.v22 == v22(d));
        CHECK(r.w == w_polynomial(d));
        CHECK(r.beta == static_cast<int>(((r.v21 + r.v22) % 2 + 2) % 2));
    }
}

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly a = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 3);
    const LaurentPoly b = LaurentPoly::monomial(1, -2);
    CHECK((a + b) == LaurentPoly::monomial(-1, 3));
    CHECK((a - a).is_zero());
    CHECK((3 * a).coefficient(1) == 6);
    CHECK((-a).coefficient(-1) == -3);
    CHECK(a.terms().size() == 2);
    CHECK((a + b).terms().size() == 1);
}
