#include <doctest.h>

#include <hgcolor/binomial.hpp>
#include <hgcolor/core.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/protocol_lab.hpp>

#include <cmath>

using namespace hgcolor;

namespace {

ListCollection single_list_all_red(std::uint64_t v, std::uint32_t n, std::uint32_t edge_cap) {
    Coloring all_red;
    for (VertexId u = 1; u <= v; ++u) all_red.assign(u, kRed);
    ListCollection c;
    c.universe = v;
    c.uniformity = n;
    c.edge_cap = edge_cap;
    c.lists = {{all_red}};
    return c;
}

}  // namespace

TEST_CASE("enumerate_edges") {
    const auto edges = enumerate_edges(6, 3);
    CHECK(edges.size() == 20);
    CHECK(edges.front() == Hyperedge{1, 2, 3});
    CHECK(edges.back() == Hyperedge{4, 5, 6});
}

TEST_CASE("gen_list_collection") {
    const ListCollection c = gen_list_collection(6, 3, 1, 8, 16, 42);
    REQUIRE(c.lists.size() == 8);
    for (const auto& list : c.lists) {
        REQUIRE(list.size() == 16);
        for (const auto& chi : list) CHECK(chi.size() == 6);
    }

    SUBCASE("replay is identical") {
        const ListCollection d = gen_list_collection(6, 3, 1, 8, 16, 42);
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 16; ++j) {
                CHECK(c.lists[i][j] == d.lists[i][j]);
            }
        }
    }

    SUBCASE("per-vertex red frequency sits within 4 sigma of 1/2") {
        // 8 * 16 = 128 colorings per vertex
        const double samples = 128.0;
        const double sigma = std::sqrt(samples * 0.25);
        for (VertexId u = 1; u <= 6; ++u) {
            double reds = 0;
            for (const auto& list : c.lists) {
                for (const auto& chi : list) {
                    if (chi.at(u) == kRed) ++reds;
                }
            }
            CHECK(std::abs(reds - samples / 2.0) <= 4.0 * sigma);
        }
    }

    SUBCASE("single uniform coloring") {
        const ListCollection one = gen_list_collection(6, 3, 1, 1, 1, 7);
        CHECK(one.lists.size() == 1);
        CHECK(one.lists[0].size() == 1);
    }
}

TEST_CASE("lemma_list_params") {
    const LemmaListParams p = lemma_list_params(8, 64);
    CHECK(p.list_count == 256);
    CHECK(p.list_length == static_cast<std::uint64_t>(std::ceil(6.0 * 16.0 * 6.0)));
}

TEST_CASE("alice_message") {
    SUBCASE("zero-edge hypergraph vacuously picks list 0") {
        const ListCollection c = gen_list_collection(6, 3, 1, 4, 4, 3);
        const Hypergraph empty(3, 6);
        CHECK(alice_message(empty, c) == 0);
    }

    SUBCASE("skips a list containing a coloring that fails her edge") {
        Coloring all_red;
        Coloring split;
        for (VertexId u = 1; u <= 6; ++u) {
            all_red.assign(u, kRed);
            split.assign(u, u <= 3 ? kRed : kBlue);
        }
        ListCollection c;
        c.universe = 6;
        c.uniformity = 3;
        c.edge_cap = 1;
        c.lists = {{all_red}, {split}};
        const Hypergraph ha = Hypergraph::from_edges(3, {Hyperedge{1, 2, 6}}, 6);
        CHECK(alice_message(ha, c) == 1);

        const Hypergraph mono_under_both =
            Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}}, 6);
        CHECK_FALSE(alice_message(mono_under_both, c).has_value());
    }
}

TEST_CASE("bob_answer") {
    Coloring all_red;
    Coloring split;
    for (VertexId u = 1; u <= 6; ++u) {
        all_red.assign(u, kRed);
        split.assign(u, u <= 3 ? kRed : kBlue);
    }

    SUBCASE("empty hypergraph takes the first coloring") {
        const Hypergraph empty(3, 6);
        const auto chi = bob_answer(empty, {all_red, split});
        REQUIRE(chi.has_value());
        CHECK(*chi == all_red);
    }

    SUBCASE("absent when nothing in the list works") {
        const Hypergraph hb = Hypergraph::from_edges(3, {Hyperedge{1, 2, 3}}, 6);
        CHECK_FALSE(bob_answer(hb, {all_red}).has_value());
    }

    SUBCASE("first valid coloring wins") {
        const Hypergraph hb = Hypergraph::from_edges(3, {Hyperedge{1, 2, 4}}, 6);
        const auto chi = bob_answer(hb, {all_red, split});
        REQUIRE(chi.has_value());
        CHECK(*chi == split);
    }
}

TEST_CASE("verify_goodness") {
    SUBCASE("the all-red-only collection is good for neither side") {
        const Goodness g = verify_goodness(single_list_all_red(6, 3, 1));
        CHECK_FALSE(g.good_for_alice);
        CHECK_FALSE(g.good_for_bob);
    }

    SUBCASE("size guard") {
        ListCollection too_big = single_list_all_red(10, 3, 1);  // C(10,3) = 120 > 20
        CHECK_THROWS_AS(verify_goodness(too_big), InstanceTooLargeError);
        ListCollection deep = single_list_all_red(6, 3, 3);
        CHECK_THROWS_AS(verify_goodness(deep), InstanceTooLargeError);
    }

    SUBCASE("a hand-built good collection at edge_cap 1") {
        // Complementary split pairs: every single edge is bichromatic under a
        // split that separates it, and each list holds a coloring pair whose
        // shadows are disjoint enough to cover all 20 edges.
        std::vector<Coloring> splits;
        for (std::uint32_t mask = 1; mask < 32; ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            Coloring chi;  // vertex 6 fixed blue, mask picks 3 reds among 1..5
            for (VertexId u = 1; u <= 5; ++u) {
                chi.assign(u, (mask >> (u - 1)) & 1u ? kRed : kBlue);
            }
            chi.assign(6, kBlue);
            splits.push_back(std::move(chi));
        }
        REQUIRE(splits.size() == 10);
        ListCollection c;
        c.universe = 6;
        c.uniformity = 3;
        c.edge_cap = 1;
        c.lists.resize(10);
        for (std::size_t i = 0; i < 10; ++i) c.lists[i] = {splits[i]};
        // Each list is one balanced split: good for Alice iff every edge has
        // some split avoiding it (true), good for Bob iff every split avoids
        // every edge (false: each split has monochromatic triples).
        const Goodness g = verify_goodness(c);
        CHECK(g.good_for_alice);
        CHECK_FALSE(g.good_for_bob);
    }

    SUBCASE("a split cannot cover its own class edge, even next to all-red") {
        // Lists of the form {all-red, one balanced split}: the hypergraph
        // consisting of the split's red class defeats that list (both
        // colorings leave it monochromatic), so such collections are good
        // for neither side.
        Coloring all_red;
        for (VertexId u = 1; u <= 6; ++u) all_red.assign(u, kRed);
        ListCollection c;
        c.universe = 6;
        c.uniformity = 3;
        c.edge_cap = 1;
        for (std::uint32_t mask = 1; mask < 64; ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            Coloring split;
            for (VertexId u = 1; u <= 6; ++u) {
                split.assign(u, (mask >> (u - 1)) & 1u ? kRed : kBlue);
            }
            c.lists.push_back({all_red, std::move(split)});
        }
        const Goodness g = verify_goodness(c);
        CHECK_FALSE(g.good_for_bob);
        CHECK_FALSE(g.good_for_alice);
    }

    SUBCASE("some seed in a short scan is good both ways at r=16, k=8") {
        bool found = false;
        for (std::uint64_t seed = 0; seed < 40 && !found; ++seed) {
            const ListCollection c = gen_list_collection(6, 3, 1, 16, 8, seed);
            const Goodness g = verify_goodness(c);
            found = g.good_for_alice && g.good_for_bob;
        }
        CHECK(found);
    }
}

TEST_CASE("shadow sizes agree with enumerated monochromatic counts") {
    const ListCollection c = gen_list_collection(6, 3, 1, 4, 4, 11);
    for (const auto& list : c.lists) {
        for (const Coloring& chi : list) {
            const std::uint64_t reds = chi.count_color(kRed);
            std::uint64_t enumerated = 0;
            for (const auto& e : enumerate_edges(6, 3)) {
                if (is_monochromatic(e, chi)) ++enumerated;
            }
            CHECK(shadow_size(reds, 6, 3) == enumerated);
        }
    }
}
