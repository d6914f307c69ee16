#ifndef HGCOLOR_SPARSE_VERTEX_HPP
#define HGCOLOR_SPARSE_VERTEX_HPP

#include <hgcolor/stream_io.hpp>
#include <hgcolor/types.hpp>

#include <cstdint>
#include <variant>

namespace hgcolor {

// Colorers and bounds for n-uniform hypergraphs on few vertices, where a
// random near-equal split is already valid with good probability.

/**
 * Exact probability that a fixed n-edge is monochromatic under a uniformly
 * random balanced split of [v]:
 * (C(ceil(v/2), n) + C(floor(v/2), n)) / C(v, n), evaluated in big integers.
 */
double mono_prob_exact(std::uint64_t v, std::uint32_t n);

/// Closed-form bound 2^-(n-1) * exp(-(n-1)^2 / (2v)) on the same probability.
double mono_prob_bound(std::uint64_t v, std::uint32_t n);

/// Uniformly random split of [1, v] with ceil(v/2) red vertices.
Coloring make_balanced_split(std::uint64_t v, std::uint64_t seed);

/// Uniformly random partition of [1, v] into k classes with sizes differing by <= 1.
Coloring make_k_split(std::uint64_t v, std::uint32_t k, std::uint64_t seed);

struct SplitColorResult {
    std::variant<Coloring, Failure> outcome;
    std::uint64_t edges_processed = 0;
    std::uint64_t failure_position = 0;  // 1-based index of the offending edge, 0 if none

    bool ok() const { return std::holds_alternative<Coloring>(outcome); }
    const Coloring& coloring() const { return std::get<Coloring>(outcome); }
    const Failure& failure() const { return std::get<Failure>(outcome); }
};

/**
 * Fixes a balanced split of the known universe [1, v] up front, then streams
 * the edges and fails on the first monochromatic one. State is the split
 * plus counters. Vertices outside [1, v] raise ParameterDomainError.
 */
SplitColorResult balanced_stream_color(EdgeSource& edges, std::uint64_t v, std::uint32_t n,
                                       std::uint64_t seed);

/// Same with k classes; fails on the first edge contained in one class.
SplitColorResult k_balanced_stream_color(EdgeSource& edges, std::uint64_t v, std::uint32_t n,
                                         std::uint32_t k, std::uint64_t seed);

struct MBounds {
    double lower;
    double upper;
};

/**
 * Bracket for m(n, t), the minimum edge count of a non-two-colorable
 * n-uniform hypergraph on floor(n^2/t) vertices:
 * 2^(n-1) exp(t/8) <= m(n,t) <= (n^2/t) 2^n exp(tn/(n-2t)).
 * Requires 4 <= t <= n^2/(2n-1); upper is +inf when n == 2t.
 */
MBounds m_bounds(std::uint32_t n, std::uint32_t t);

/**
 * The k-coloring generalization:
 * k^(n-1) exp(-(k-1)t/2) <= m_k(n,t) <= (n^2/t) k^n exp((k-1)tn/(n-kt)).
 */
MBounds mk_bounds(std::uint32_t n, std::uint32_t t, std::uint32_t k);

}  // namespace hgcolor

#endif  // HGCOLOR_SPARSE_VERTEX_HPP
