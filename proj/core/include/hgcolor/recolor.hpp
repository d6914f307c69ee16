#ifndef HGCOLOR_RECOLOR_HPP
#define HGCOLOR_RECOLOR_HPP

#include <hgcolor/stream_io.hpp>
#include <hgcolor/tape.hpp>
#include <hgcolor/types.hpp>

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace hgcolor {

/**
 * Delayed recoloring, in two provably output-equivalent flavors.
 *
 * Offline: color everything, record the initially monochromatic edges, then
 * visit vertices in a random permutation; a vertex flips once if it carries
 * the recoloring bit and some initially monochromatic edge through it is
 * still monochromatic at its turn.
 *
 * Streaming: one pass over the edges with per-vertex state only. On each
 * edge that was monochromatic under the initial coloring, the first vertex
 * in permutation order carrying the recoloring bit flips, unless it already
 * flipped. Given the same tape, both produce the same final coloring
 * pointwise for every arrival order.
 */

/// Default recoloring probability (ln n - ln ln n) / (2n); requires n >= 3.
double p_default(std::uint32_t n);

/// Per-vertex state maintained by the streaming engine.
struct VertexState {
    ColorId initial_color;
    ColorId current_color;
    bool recolor_bit;
    std::uint64_t priority;
};

class RecolorState {
public:
    /// Instantiates u from the tape on first sight; returns true if new.
    bool discover(VertexId u, const VertexTape& tape) {
        auto [it, inserted] = table_.try_emplace(u);
        if (inserted) {
            const VertexDraw d = tape.draw(u);
            it->second = VertexState{d.initial_color, d.initial_color, d.recolor_bit, d.priority};
        }
        return inserted;
    }

    const VertexState& at(VertexId u) const { return table_.at(u); }
    bool contains(VertexId u) const { return table_.count(u) > 0; }
    std::size_t size() const { return table_.size(); }

    /// Flips u away from its initial color. A vertex never flips twice.
    void flip(VertexId u) {
        VertexState& s = table_.at(u);
        s.current_color = opposite(s.current_color);
    }

    Coloring current_coloring() const {
        Coloring chi;
        for (const auto& [u, s] : table_) chi.assign(u, s.current_color);
        return chi;
    }

    const std::unordered_map<VertexId, VertexState>& table() const { return table_; }

private:
    std::unordered_map<VertexId, VertexState> table_;
};

/**
 * The recoloring candidate of an edge: among its vertices with the recolor
 * bit set, the one of minimal (priority, id); nullopt if none carries the bit.
 * All edge vertices must already be instantiated in the state.
 */
std::optional<VertexId> first_flippable(const Hyperedge& edge, const RecolorState& state);

struct RunStats {
    std::uint64_t edges_processed = 0;
    std::uint64_t vertices_discovered = 0;
    std::uint64_t peak_state_entries = 0;
    std::uint64_t flips = 0;
    std::uint64_t initially_mono_edges = 0;  // multiset count over arrivals
    std::uint64_t no_candidate_events = 0;   // initially-mono edge with no recolor bit
};

/// Algorithm run over the full hypergraph; always returns a coloring of its vertex set.
Coloring offline_color(const Hypergraph& h, const VertexTape& tape);

struct StreamColorResult {
    Coloring coloring;
    RunStats stats;
};

/// Single pass over the edge stream; always returns a coloring (possibly invalid).
StreamColorResult stream_color(EdgeSource& edges, const VertexTape& tape);

}  // namespace hgcolor

#endif  // HGCOLOR_RECOLOR_HPP
