#ifndef HGCOLOR_PROTOCOL_LAB_HPP
#define HGCOLOR_PROTOCOL_LAB_HPP

#include <hgcolor/types.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hgcolor {

// Toy-scale executable version of the one-round two-player coloring
// protocol: Alice names a list whose every coloring is valid for her
// hypergraph, Bob picks from that list a coloring valid for his.

struct ListCollection {
    std::uint64_t universe = 0;   // colorings are over [1, universe]
    std::uint32_t uniformity = 0;
    std::uint32_t edge_cap = 0;   // hypergraphs considered have exactly this many edges
    std::uint64_t seed = 0;
    std::vector<std::vector<Coloring>> lists;
};

/// r * k colorings drawn independently and uniformly, deterministic in seed.
ListCollection gen_list_collection(std::uint64_t v, std::uint32_t n, std::uint32_t edge_cap,
                                   std::uint32_t list_count, std::uint32_t list_length,
                                   std::uint64_t seed);

struct LemmaListParams {
    std::uint64_t list_count;   // r = 2^n
    std::uint64_t list_length;  // k = ceil(6 * 2^(n/2) * log2(v))
};

/// The parameter preset under which random collections are good for large n.
LemmaListParams lemma_list_params(std::uint32_t n, std::uint64_t v);

/// Smallest list index whose colorings are all valid for ha; nullopt if none.
std::optional<std::size_t> alice_message(const Hypergraph& ha, const ListCollection& c);

/// First coloring in the list valid for hb; nullopt if none.
std::optional<Coloring> bob_answer(const Hypergraph& hb, const std::vector<Coloring>& list);

struct Goodness {
    bool good_for_alice = false;  // every hypergraph has some all-valid list
    bool good_for_bob = false;    // every hypergraph has a valid coloring in every list
};

/**
 * Exhaustive check over all hypergraphs with exactly edge_cap edges drawn
 * from the C(v, n) possible ones. Guarded: C(v, n) <= 20 and edge_cap <= 2,
 * otherwise InstanceTooLargeError.
 */
Goodness verify_goodness(const ListCollection& c);

/// All n-subsets of [1, v] in lexicographic order.
std::vector<Hyperedge> enumerate_edges(std::uint64_t v, std::uint32_t n);

}  // namespace hgcolor

#endif  // HGCOLOR_PROTOCOL_LAB_HPP
