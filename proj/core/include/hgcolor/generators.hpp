#ifndef HGCOLOR_GENERATORS_HPP
#define HGCOLOR_GENERATORS_HPP

#include <hgcolor/types.hpp>

#include <cstdint>
#include <vector>

namespace hgcolor {

/**
 * q edges drawn independently and uniformly from the C(v, n) possible
 * n-subsets of [1, v], deterministic in seed. Sampling is n distinct draws
 * from [1, v] with redraws on within-edge collisions, which is exactly
 * uniform over n-subsets.
 */
std::vector<Hyperedge> gen_uniform_random(std::uint64_t v, std::uint32_t n, std::uint64_t q,
                                          std::uint64_t seed);

/// Streaming flavor: uniform edge i of the (v, n, seed) sequence, i = 0,1,...
Hyperedge uniform_random_edge(std::uint64_t v, std::uint32_t n, std::uint64_t seed,
                              std::uint64_t index);

struct ErdosParams {
    std::uint64_t universe;    // N = floor(n^2 / t)
    std::uint64_t edge_count;  // q = ceil(N * 2^n * exp(tn/(n-2t)) * ln 2)
};

/**
 * Parameters of the random non-two-colorable construction: N = floor(n^2/t)
 * vertices and the minimal q making a uniformly random q-edge hypergraph
 * invalid under every coloring with positive probability margin.
 * Requires t <= n^2/(2n-1), N >= 2n-1 and t < n/2 (finite q).
 */
ErdosParams erdos_params(std::uint32_t n, std::uint32_t t);

struct ErdosInstance {
    ErdosParams params;
    std::vector<Hyperedge> edges;
};

ErdosInstance gen_erdos(std::uint32_t n, std::uint32_t t, std::uint64_t seed);

}  // namespace hgcolor

#endif  // HGCOLOR_GENERATORS_HPP
