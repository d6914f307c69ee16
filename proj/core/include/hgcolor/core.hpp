#ifndef HGCOLOR_CORE_HPP
#define HGCOLOR_CORE_HPP

#include <hgcolor/binomial.hpp>
#include <hgcolor/types.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hgcolor {

/// True iff every vertex of the edge has the same color.
bool is_monochromatic(const Hyperedge& edge, const Coloring& coloring);

/// Exactly the monochromatic edges (multiset-aware); empty iff the coloring is valid.
std::vector<Hyperedge> validate_coloring(const Hypergraph& h, const Coloring& coloring);

/**
 * Exhaustive two-colorability oracle over 2^v assignments (halved by the
 * red/blue symmetry). Returns some valid coloring if one exists.
 * Throws InstanceTooLargeError above kBruteForceVertexLimit vertices.
 */
std::optional<Coloring> brute_force_two_colorable(const Hypergraph& h);

inline constexpr std::uint64_t kBruteForceVertexLimit = 30;

/**
 * |Delta(chi)| for a coloring with red_count red vertices out of v:
 * C(red_count, n) + C(v - red_count, n) possible monochromatic n-edges.
 */
BigInt shadow_size(std::uint64_t red_count, std::uint64_t v, std::uint32_t n);

/// Max over edges e of the number of other edge instances meeting e.
std::uint64_t max_edge_intersections(const Hypergraph& h);

}  // namespace hgcolor

#endif  // HGCOLOR_CORE_HPP
