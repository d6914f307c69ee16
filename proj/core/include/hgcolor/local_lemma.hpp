#ifndef HGCOLOR_LOCAL_LEMMA_HPP
#define HGCOLOR_LOCAL_LEMMA_HPP

#include <hgcolor/stream_io.hpp>
#include <hgcolor/types.hpp>

#include <cstdint>
#include <variant>

namespace hgcolor {

// Multi-pass streaming colorer for hypergraphs with bounded edge
// intersections, in the style of parallel resampling: pass 0 assigns fresh
// uniform colors at first sight; every later pass resamples each
// monochromatic edge whose vertices are all untouched so far in that pass.
// A pass observing zero monochromatic edges certifies the coloring.

struct LocalStats {
    std::uint64_t passes = 0;             // passes executed, pass 0 included
    std::uint64_t resamples = 0;          // vertex resampling events
    std::uint64_t vertices_discovered = 0;
    std::uint64_t mono_last_pass = 0;     // monochromatic edges seen in the final pass
};

struct LocalResult {
    std::variant<Coloring, Failure> outcome;
    LocalStats stats;

    bool ok() const { return std::holds_alternative<Coloring>(outcome); }
    const Coloring& coloring() const { return std::get<Coloring>(outcome); }
    const Failure& failure() const { return std::get<Failure>(outcome); }
};

/**
 * Requires a rewindable source (the stream is replayed once per pass).
 * Returns Failure{PassBudgetExhausted} after max_passes passes without a
 * clean verification pass. Resampling randomness is a deterministic function
 * of (seed, pass, vertex, per-vertex occurrence counter).
 */
LocalResult local_stream_color(EdgeSource& edges, std::uint32_t n, std::uint64_t seed,
                               std::uint64_t max_passes);

/// Default pass budget ceil(4 * log2(v + 2)).
std::uint64_t default_max_passes(std::uint64_t v);

/// Intersection threshold (1 - epsilon) * 2^(n-1) / e - 1.
double local_intersection_threshold(std::uint32_t n, double epsilon);

/// True iff no edge of h meets more than the threshold many other edges.
bool check_local_precondition(const Hypergraph& h, double epsilon);

}  // namespace hgcolor

#endif  // HGCOLOR_LOCAL_LEMMA_HPP
