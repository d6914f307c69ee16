#include <doctest.h>

#include <hgcolor/core.hpp>
#include <hgcolor/generators.hpp>

#include "helpers.hpp"

using namespace hgcolor;
using hgtest::fano_plane;

TEST_CASE("hyperedge invariants") {
    CHECK_THROWS_AS(Hyperedge({1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Hyperedge({1, 2}), std::invalid_argument);
    const Hyperedge e{3, 1, 2};
    CHECK(e.vertices() == std::vector<VertexId>{1, 2, 3});  // canonical order
    CHECK(e.contains(3));
    CHECK_FALSE(e.contains(4));
}

TEST_CASE("is_monochromatic") {
    Coloring all_red;
    for (VertexId u : {1, 2, 3}) all_red.assign(u, kRed);
    CHECK(is_monochromatic(Hyperedge{1, 2, 3}, all_red));

    Coloring mixed = all_red;
    mixed.assign(1, kBlue);
    CHECK_FALSE(is_monochromatic(Hyperedge{1, 2, 3}, mixed));

    SUBCASE("missing assignment throws") {
        Coloring partial;
        partial.assign(1, kRed);
        partial.assign(2, kRed);
        CHECK_THROWS_AS(is_monochromatic(Hyperedge{1, 2, 3}, partial),
                        MissingAssignmentError);
    }

    SUBCASE("fano line {1,2,4} under Red={1,2,3,4}") {
        Coloring chi;
        for (VertexId u = 1; u <= 7; ++u) chi.assign(u, u <= 4 ? kRed : kBlue);
        CHECK(is_monochromatic(Hyperedge{1, 2, 4}, chi));
    }
}

TEST_CASE("validate_coloring") {
    const Hypergraph single = Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}});
    Coloring all_blue;
    for (VertexId u : {1, 2, 3}) all_blue.assign(u, kBlue);
    const auto violations = validate_coloring(single, all_blue);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == Hyperedge{1, 2, 3});

    SUBCASE("every coloring of the fano plane has a violation") {
        const Hypergraph fano = fano_plane();
        for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
            Coloring chi;
            for (VertexId u = 1; u <= 7; ++u) chi.assign(u, (mask >> (u - 1)) & 1u);
            CHECK_FALSE(validate_coloring(fano, chi).empty());
        }
    }

    SUBCASE("cross-check against is_monochromatic on random instances") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto edges = gen_uniform_random(10, 3, 15, seed);
            const Hypergraph h = Hypergraph::from_edges(3, edges);
            const Coloring chi = hgtest::uniform_coloring(h.vertex_set(), seed + 100);
            const auto bad = validate_coloring(h, chi);
            std::size_t direct = 0;
            for (const auto& e : h.edges()) {
                if (is_monochromatic(e, chi)) ++direct;
            }
            CHECK(bad.size() == direct);
        }
    }
}

TEST_CASE("brute_force_two_colorable") {
    SUBCASE("empty edge multiset is trivially colorable") {
        const Hypergraph empty(3);
        const auto chi = brute_force_two_colorable(empty);
        REQUIRE(chi.has_value());
        CHECK(chi->size() == 0);
    }

    SUBCASE("fano plane is not two-colorable") {
        CHECK_FALSE(brute_force_two_colorable(fano_plane()).has_value());
    }

    SUBCASE("fano minus any single edge is two-colorable") {
        const Hypergraph fano = fano_plane();
        for (std::size_t skip = 0; skip < fano.edge_count(); ++skip) {
            std::vector<Hyperedge> edges;
            for (std::size_t i = 0; i < fano.edge_count(); ++i) {
                if (i != skip) edges.push_back(fano.edges()[i]);
            }
            const Hypergraph reduced = Hypergraph::from_edges(3, edges);
            const auto chi = brute_force_two_colorable(reduced);
            REQUIRE(chi.has_value());
            CHECK(validate_coloring(reduced, *chi).empty());
        }
    }

    SUBCASE("returned colorings always validate") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto edges = gen_uniform_random(8, 3, 12, seed);
            const Hypergraph h = Hypergraph::from_edges(3, edges);
            if (const auto chi = brute_force_two_colorable(h)) {
                CHECK(validate_coloring(h, *chi).empty());
            }
        }
    }

    SUBCASE("v <= 2n-2 is always two-colorable") {
        // Avoid duplicated draws dominating: few edges over a tiny universe.
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto edges = gen_uniform_random(8, 5, 30, seed);  // v = 2n-2
            const Hypergraph h = Hypergraph::from_edges(5, edges);
            CHECK(brute_force_two_colorable(h).has_value());
        }
    }

    SUBCASE("enumeration guard") {
        std::vector<Hyperedge> edges;
        std::vector<VertexId> verts;
        for (VertexId u = 1; u <= 31; ++u) verts.push_back(u);
        for (std::size_t i = 0; i + 3 <= 31; i += 3) {
            edges.push_back(Hyperedge{verts[i], verts[i + 1], verts[i + 2]});
        }
        edges.push_back(Hyperedge{29, 30, 31});
        const Hypergraph big = Hypergraph::from_edges(3, edges);
        CHECK(big.vertex_set().size() == 31);
        CHECK_THROWS_AS(brute_force_two_colorable(big), InstanceTooLargeError);
    }
}

TEST_CASE("shadow_size") {
    CHECK(shadow_size(2, 4, 3) == 0);
    CHECK(shadow_size(3, 6, 3) == 2);
    CHECK(shadow_size(6, 6, 3) == 20);

    SUBCASE("matches enumeration for all red counts, v <= 12, n <= 5") {
        for (std::uint32_t n = 3; n <= 5; ++n) {
            for (std::uint64_t v = n; v <= 12; ++v) {
                for (std::uint64_t r = 0; r <= v; ++r) {
                    Coloring chi;
                    for (VertexId u = 1; u <= v; ++u) chi.assign(u, u <= r ? kRed : kBlue);
                    const auto expected = hgtest::count_mono_subsets(chi, v, n);
                    CHECK(shadow_size(r, v, n) == expected);
                }
            }
        }
    }
}

TEST_CASE("max_edge_intersections") {
    CHECK(max_edge_intersections(Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}})) == 0);
    CHECK(max_edge_intersections(
              Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}, Hyperedge{4, 5, 6}})) == 0);
    // three edges pairwise sharing vertex 1
    CHECK(max_edge_intersections(Hypergraph::from_edges(
              3, {Hyperedge{1, 2, 3}, Hyperedge{1, 4, 5}, Hyperedge{1, 6, 7}})) == 2);
    // duplicates count as distinct instances
    CHECK(max_edge_intersections(
              Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}, Hyperedge{1, 2, 3}})) == 1);
}
