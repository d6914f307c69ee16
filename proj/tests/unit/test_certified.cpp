#include <doctest.h>

#include <hgcolor/certified.hpp>
#include <hgcolor/core.hpp>
#include <hgcolor/generators.hpp>
#include <hgcolor/prf.hpp>

#include "helpers.hpp"

using namespace hgcolor;
using hgtest::ScriptedTape;

TEST_CASE("residual_expected_size_bound") {
    CHECK(residual_expected_size_bound(12, 0.0, 0.1) == 0.0);
    CHECK(std::abs(residual_expected_size_bound(12, 900.0, p_default(12)) - 0.348) < 1e-3);
    CHECK_THROWS_AS(residual_expected_size_bound(12, 900.0, 0.0), ParameterDomainError);
    CHECK_THROWS_AS(residual_expected_size_bound(12, -1.0, 0.5), ParameterDomainError);

    SUBCASE("at the guaranteed regime the bound stays under n/20 for large n") {
        for (std::uint32_t n : {100, 144, 200, 300}) {
            const double q = 0.1 * std::sqrt(n / std::log(n)) * std::exp2(n);
            CHECK(residual_expected_size_bound(n, q, p_default(n)) <= n / 20.0);
        }
    }
}

TEST_CASE("certified trivial paths") {
    SUBCASE("empty stream returns an empty coloring") {
        VectorEdgeSource src({});
        const RandomTape tape(5, 0.2);
        const CertifiedResult r = certified_stream_color(src, tape);
        REQUIRE(r.ok());
        CHECK(r.coloring().size() == 0);
        CHECK(r.residuals.blue_residuals.empty());
        CHECK(r.residuals.red_residuals.empty());
    }

    SUBCASE("no mono edge and no storable part leaves chi0") {
        ScriptedTape tape;
        tape.set(1, kRed, false, 1).set(2, kBlue, false, 2).set(3, kRed, true, 3);
        VectorEdgeSource src({Hyperedge{1, 2, 3}});
        const CertifiedResult r = certified_stream_color(src, tape);
        REQUIRE(r.ok());
        CHECK(r.coloring().at(1) == kRed);
        CHECK(r.coloring().at(2) == kBlue);
        CHECK(r.coloring().at(3) == kRed);
        CHECK(r.residuals.blue_size == 0);
        CHECK(r.residuals.red_size == 0);
    }

    SUBCASE("mono edge with all bits off fails check (a)") {
        ScriptedTape tape;
        tape.set(1, kRed, false, 1).set(2, kRed, false, 2).set(3, kRed, false, 3);
        VectorEdgeSource src({Hyperedge{1, 2, 3}});
        const CertifiedResult r = certified_stream_color(src, tape);
        REQUIRE_FALSE(r.ok());
        CHECK(r.failure().reason == FailureReason::UnfixableMonoEdge);
        REQUIRE(r.failure().witness.has_value());
        CHECK(*r.failure().witness == Hyperedge{1, 2, 3});
    }
}

TEST_CASE("certified residual bookkeeping") {
    SUBCASE("an all-bits red part is stored and checked at the end") {
        // Edge {1,2,3}: 1 is red with the bit, 2 and 3 blue without bits.
        // The red part {1} may turn blue only via a flip of vertex 1.
        ScriptedTape tape;
        tape.set(1, kRed, true, 5).set(2, kBlue, false, 1).set(3, kBlue, false, 2);
        VectorEdgeSource src({Hyperedge{1, 2, 3}});
        const CertifiedResult r = certified_stream_color(src, tape);
        REQUIRE(r.ok());
        CHECK(r.residuals.blue_residuals == std::vector<std::vector<VertexId>>{{1}});
        CHECK(r.residuals.blue_size == 1);
        CHECK(r.residuals.red_size == 0);  // blue part {2,3} has its bits off
    }

    SUBCASE("overflow aborts the run") {
        // Every edge contributes a size-2 all-bits red part; cap 3 overflows
        // on the second edge.
        ScriptedTape tape;
        for (VertexId u = 1; u <= 4; ++u) tape.set(u, kRed, true, u);
        for (VertexId u = 5; u <= 8; ++u) tape.set(u, kBlue, false, u);
        VectorEdgeSource src({Hyperedge{1, 2, 5}, Hyperedge{3, 4, 6}});
        const CertifiedResult r = certified_stream_color(src, tape, 3);
        REQUIRE_FALSE(r.ok());
        CHECK(r.failure().reason == FailureReason::ResidualOverflowBlue);
    }

    SUBCASE("final check catches a wholesale flip") {
        // {1,4,5}: red part {1} with bit. {1,2,3} all red forces 1 to flip
        // (it has the least priority among bit carriers), turning {1} blue.
        ScriptedTape tape;
        tape.set(1, kRed, true, 1).set(2, kRed, true, 2).set(3, kRed, true, 3);
        tape.set(4, kBlue, false, 4).set(5, kBlue, false, 5);
        VectorEdgeSource src({Hyperedge{1, 4, 5}, Hyperedge{1, 2, 3}});
        const CertifiedResult r = certified_stream_color(src, tape, /*cap=*/10);
        REQUIRE_FALSE(r.ok());
        CHECK(r.failure().reason == FailureReason::FinalCheckBlue);
    }
}

TEST_CASE("certified soundness and space on random regimes") {
    std::uint64_t failures = 0;
    std::uint64_t trials = 0;
    for (const auto& [n, v, q] : std::vector<std::tuple<std::uint32_t, std::uint64_t,
                                                        std::uint64_t>>{
             {3, 9, 10}, {4, 16, 30}, {6, 36, 100}, {8, 64, 200}, {12, 144, 900}}) {
        for (std::uint64_t t = 0; t < 120; ++t) {
            ++trials;
            const auto edges = gen_uniform_random(v, n, q, prf(50, n, t));
            const RandomTape tape(prf(51, n, t), p_default(n));
            VectorEdgeSource src(edges);
            const CertifiedResult r = certified_stream_color(src, tape);
            CHECK(r.residuals.peak_total_size <= 2 * n);
            if (!r.ok()) {
                ++failures;
                continue;
            }
            const Hypergraph h = Hypergraph::from_edges(n, edges);
            CHECK(validate_coloring(h, r.coloring()).empty());
        }
    }
    CHECK(trials == 600);
    CHECK(failures < trials);  // some regimes succeed
}
