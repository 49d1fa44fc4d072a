#include <doctest.h>

#include "longknot/certificate.hpp"
#include "longknot/gauss_code.hpp"
#include "longknot/invariants.hpp"
#include "longknot/knot_table.hpp"
#include "longknot/moves.hpp"
#include "longknot/operations.hpp"
#include "longknot/search.hpp"

#include <random>

using namespace longknot;

TEST_CASE("empty certificate with start = end is accepted") {
    const auto c = CobordismCertificate::make(LinkGaussDiagram(), {}, LinkGaussDiagram());
    CHECK(verify_certificate(c, CertificateMode::Ribbon).accepted);
    const auto k = CobordismCertificate::make(LinkGaussDiagram(knots::right_trefoil()), {},
                                              LinkGaussDiagram(knots::right_trefoil()));
    CHECK(verify_certificate(k, CertificateMode::Concordance).accepted);
}

TEST_CASE("accounting") {
    // A birth alone breaks #b - #s + #d = 0 and leaves an extra circle.
    const auto lone_birth = CobordismCertificate::make(
        LinkGaussDiagram(), {MoveEvent(BirthSite{})}, parse_link_code("|"));
    const Verdict v = verify_certificate(lone_birth, CertificateMode::Concordance);
    CHECK_FALSE(v.accepted);
    CHECK(v.counts.births == 1);

    // Birth then merge: Euler count 0, fine for concordance but not ribbon.
    const auto birth_merge = CobordismCertificate::make(
        LinkGaussDiagram(),
        {MoveEvent(BirthSite{}), MoveEvent(SaddleSite{Gap{0, 0}, Gap{1, 0}, Reconnection::Oriented})},
        LinkGaussDiagram());
    CHECK(verify_certificate(birth_merge, CertificateMode::Concordance).accepted);
    const Verdict ribbon = verify_certificate(birth_merge, CertificateMode::Ribbon);
    CHECK_FALSE(ribbon.accepted);
    CHECK_FALSE(ribbon.failing_step.has_value());

    // Counts that disagree with the events are rejected.
    auto lying = birth_merge;
    lying.counts.saddles = 2;
    CHECK_FALSE(verify_certificate(lying, CertificateMode::Concordance).accepted);

    // Wrong end.
    auto wrong_end = birth_merge;
    wrong_end.end = LinkGaussDiagram(knots::right_trefoil());
    CHECK_FALSE(verify_certificate(wrong_end, CertificateMode::Concordance).accepted);
}

TEST_CASE("band-pass events are not accepted in certificates") {
    const auto c = CobordismCertificate::make(
        LinkGaussDiagram(knots::fly()),
        {MoveEvent(BandPassSite{{1, 2, 3, 4}, BandPassVariant::First, 1, 1})},
        LinkGaussDiagram(knots::fly()));
    const Verdict v = verify_certificate(c, CertificateMode::Concordance);
    CHECK_FALSE(v.accepted);
    CHECK(v.failing_step == std::optional<std::size_t>(0));
}

TEST_CASE("fly certificate") {
    const auto c = CobordismCertificate::parse(knots::fly_certificate_text());
    const Verdict v = verify_certificate(c, CertificateMode::Ribbon);
    CHECK(v.accepted);
    CHECK(v.counts == CobordismCounts{0, 1, 1});
    CHECK(beta(knots::fly()) == 1);
    CHECK(c.to_text() == knots::fly_certificate_text());
    CHECK(serialize(renumber(c.start)) == serialize(LinkGaussDiagram(knots::fly())));
}

TEST_CASE("certificate text round trip and format errors") {
    const auto c = trivialize_inverse_pair(knots::figure_eight());
    const auto again = CobordismCertificate::parse(c.to_text());
    CHECK(again.to_text() == c.to_text());
    CHECK(again.events == c.events);
    CHECK_THROWS_AS(CobordismCertificate::parse("event Birth\n"), CertificateFormatError);
    CHECK_THROWS_AS(CobordismCertificate::parse("start \nend \n"), CertificateFormatError);
    CHECK_THROWS_AS(CobordismCertificate::parse("start \nevent Jump\nend \ncounts births=0 saddles=0 deaths=0\n"),
                    CertificateFormatError);
    CHECK_THROWS_AS(CobordismCertificate::parse("start O1(+)\nend \ncounts births=0 saddles=0 deaths=0\n"),
                    CertificateFormatError);
    CHECK_THROWS_AS(CobordismCertificate::parse("start \nend \ncounts births=0 saddles=x deaths=0\n"),
                    CertificateFormatError);
    CHECK_NOTHROW(CobordismCertificate::parse("# comment\n\nstart \nend \ncounts births=0 saddles=0 deaths=0\n"));
}

TEST_CASE("trivialize_inverse_pair") {
    SUBCASE("empty knot gives the empty certificate") {
        const auto c = trivialize_inverse_pair(LongGaussDiagram());
        CHECK(c.events.empty());
        CHECK(verify_certificate(c, CertificateMode::Ribbon).accepted);
    }
    SUBCASE("one kink") {
        const auto c = trivialize_inverse_pair(parse_gauss_code("O1(+)U1(+)"));
        CHECK(c.counts == CobordismCounts{0, 2, 2});
        CHECK(verify_certificate(c, CertificateMode::Ribbon).accepted);
        CHECK(serialize(c.start) == "O1(+)U1(+)U2(-)O2(-)");
    }
    SUBCASE("random knots") {
        std::mt19937_64 rng(77);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = uniform_below(rng, 9);
            const auto k = random_diagram(n, rng);
            const auto c = trivialize_inverse_pair(k);
            const Verdict v = verify_certificate(c, CertificateMode::Ribbon);
            CHECK(v.accepted);
            CHECK(c.counts == CobordismCounts{0, 2 * n, 2 * n});
            CHECK(replay(c.start, c.events) == LinkGaussDiagram());
            CHECK(serialize(c.start) == serialize(renumber(concatenate(k, inverse(k)))));
        }
    }
}

TEST_CASE("corrupted certificates are rejected at the corrupted step") {
    std::mt19937_64 rng(123);
    int exact = 0;
    for (int t = 0; t < 200; ++t) {
        const auto k = random_diagram(1 + uniform_below(rng, 5), rng);
        auto c = trivialize_inverse_pair(k);
        const std::size_t i = uniform_below(rng, c.events.size());
        // Swap in an event of another kind or with shifted coordinates.
        std::vector<MoveEvent> candidates{
            MoveEvent(R1RemoveSite{static_cast<ArrowId>(1 + uniform_below(rng, 20))}),
            MoveEvent(R2RemoveSite{1, static_cast<ArrowId>(2 + uniform_below(rng, 20))}),
            MoveEvent(DeathSite{1 + uniform_below(rng, 3)}),
            MoveEvent(SaddleSite{Gap{0, 1}, Gap{0, 99}, Reconnection::Oriented}),
            MoveEvent(SaddleSite{Gap{0, 0}, Gap{0, 1}, Reconnection::Crossed}),
            MoveEvent(BirthSite{}),
        };
        const MoveEvent bad = candidates[uniform_below(rng, candidates.size())];
        if (bad == c.events[i]) continue;
        const LinkGaussDiagram before = replay(c.start, std::span(c.events).first(i));
        bool legal_here = true;
        try {
            apply(before, bad);
        } catch (const IllegalMoveError&) {
            legal_here = false;
        }
        c.events[i] = bad;
        c.counts = count_events(c.events);
        const Verdict v = verify_certificate(c, CertificateMode::Ribbon);
        if (!legal_here) {
            CHECK_FALSE(v.accepted);
            CHECK(v.failing_step == std::optional<std::size_t>(i));
            ++exact;
        } else if (v.failing_step) {
            // Legal substitutes (another empty circle dying, say) may still
            // verify; when they do not, the failure cannot come earlier.
            CHECK(*v.failing_step >= i);
        }
    }
    CHECK(exact > 100);
}

TEST_CASE("bounded search") {
    const LongGaussDiagram kink = parse_gauss_code("O1(+)U1(+)");
    SUBCASE("identical diagrams give the empty path") {
        const auto p = bounded_equivalence(knots::right_trefoil(), knots::right_trefoil(), 3, 2);
        REQUIRE(p.has_value());
        CHECK(p->empty());
    }
    SUBCASE("a kink is one R1 away from the unknot") {
        const auto p = bounded_equivalence(kink, LongGaussDiagram(), 2, 2);
        REQUIRE(p.has_value());
        REQUIRE(p->size() == 1);
        CHECK((*p)[0].kind() == MoveKind::R1Remove);
        const auto q = bounded_equivalence(LongGaussDiagram(), kink, 2, 2);
        REQUIRE(q.has_value());
        CHECK(q->size() == 1);
    }
    SUBCASE("different invariants are never joined") {
        const auto p = bounded_equivalence(knots::fly(), LongGaussDiagram(), 5, 2);
        CHECK_FALSE(p.has_value());
    }
    SUBCASE("planted paths are found and replay") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 25; ++t) {
            const LongGaussDiagram a = random_diagram(uniform_below(rng, 3), rng);
            LongGaussDiagram b = a;
            std::size_t max_arrows = a.arrow_count();
            const std::size_t steps = 1 + uniform_below(rng, 2);
            for (std::size_t s = 0; s < steps; ++s) {
                MoveKindSet kinds = MoveKindSet::reducing();
                if (b.arrow_count() < 4) kinds.insert(MoveKind::R1Add);
                if (b.arrow_count() < 3) kinds.insert(MoveKind::R2Add);
                const auto moves = enumerate_moves(b, kinds);
                b = apply(b, moves[uniform_below(rng, moves.size())]);
                max_arrows = std::max(max_arrows, b.arrow_count());
            }
            SearchOptions options;
            options.max_arrows = std::max<std::size_t>(max_arrows, 1);
            options.max_steps = steps;
            const SearchResult r = search_equivalence(a, b, options);
            INFO(serialize(a) << " -> " << serialize(b));
            REQUIRE(r.path.has_value());
            CHECK(r.path->size() <= steps);
            LongGaussDiagram end = a;
            for (const MoveEvent& m : *r.path) end = apply(end, m);
            CHECK(serialize(end) == serialize(b));
            CHECK(v21(end) == v21(a));
            CHECK(v22(end) == v22(a));
        }
    }
    SUBCASE("search is deterministic across thread counts") {
        SearchOptions one;
        one.max_arrows = 4;
        one.max_steps = 2;
        one.threads = 1;
        SearchOptions many = one;
        many.threads = 4;
        const auto target = parse_gauss_code("O1(+)O2(-)U2(-)U1(+)");
        const auto a = search_equivalence(kink, target, one);
        const auto b = search_equivalence(kink, target, many);
        CHECK(a.path == b.path);
        CHECK(a.states_visited == b.states_visited);
    }
    SUBCASE("state budget is reported") {
        SearchOptions tiny;
        tiny.max_arrows = 6;
        tiny.max_steps = 5;
        tiny.max_states = 10;
        const auto r = search_equivalence(LongGaussDiagram(), knots::right_trefoil(), tiny);
        CHECK_FALSE(r.path.has_value());
        CHECK(r.truncated);
    }
}
