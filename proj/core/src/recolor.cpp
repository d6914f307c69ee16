#include <hgcolor/recolor.hpp>

#include <algorithm>
#include <cmath>

namespace hgcolor {

double p_default(std::uint32_t n) {
    if (n < 3) throw ParameterDomainError("p_default requires n >= 3");
    const double dn = n;
    return (std::log(dn) - std::log(std::log(dn))) / (2.0 * dn);
}

std::optional<VertexId> first_flippable(const Hyperedge& edge, const RecolorState& state) {
    std::optional<VertexId> best;
    std::uint64_t best_priority = 0;
    for (VertexId u : edge) {
        const VertexState& s = state.at(u);
        if (!s.recolor_bit) continue;
        if (!best || s.priority < best_priority || (s.priority == best_priority && u < *best)) {
            best = u;
            best_priority = s.priority;
        }
    }
    return best;
}

Coloring offline_color(const Hypergraph& h, const VertexTape& tape) {
    const std::vector<VertexId> verts = h.vertex_set();

    RecolorState state;
    for (VertexId u : verts) state.discover(u, tape);

    // M0 and, per vertex, the initially monochromatic edges through it.
    std::unordered_map<VertexId, std::vector<const Hyperedge*>> mono_incident;
    for (const auto& e : h.edges()) {
        const ColorId first = state.at(e.vertices().front()).initial_color;
        const bool mono0 = std::all_of(e.begin(), e.end(), [&](VertexId u) {
            return state.at(u).initial_color == first;
        });
        if (!mono0) continue;
        for (VertexId u : e) mono_incident[u].push_back(&e);
    }

    std::vector<VertexId> order = verts;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        const auto& sa = state.at(a);
        const auto& sb = state.at(b);
        if (sa.priority != sb.priority) return sa.priority < sb.priority;
        return a < b;
    });

    auto still_monochromatic = [&](const Hyperedge& e) {
        const ColorId first = state.at(e.vertices().front()).current_color;
        return std::all_of(e.begin(), e.end(), [&](VertexId u) {
            return state.at(u).current_color == first;
        });
    };

    for (VertexId u : order) {
        if (!state.at(u).recolor_bit) continue;
        auto it = mono_incident.find(u);
        if (it == mono_incident.end()) continue;
        for (const Hyperedge* e : it->second) {
            if (still_monochromatic(*e)) {
                state.flip(u);
                break;
            }
        }
    }
    return state.current_coloring();
}

StreamColorResult stream_color(EdgeSource& edges, const VertexTape& tape) {
    RecolorState state;
    RunStats stats;

    while (auto edge = edges.next()) {
        ++stats.edges_processed;
        for (VertexId u : *edge) {
            if (state.discover(u, tape)) ++stats.vertices_discovered;
        }
        stats.peak_state_entries = std::max<std::uint64_t>(stats.peak_state_entries, state.size());

        const ColorId first = state.at(edge->vertices().front()).initial_color;
        const bool mono0 = std::all_of(edge->begin(), edge->end(), [&](VertexId u) {
            return state.at(u).initial_color == first;
        });
        if (!mono0) continue;
        ++stats.initially_mono_edges;

        const auto candidate = first_flippable(*edge, state);
        if (!candidate) {
            ++stats.no_candidate_events;
            continue;
        }
        const VertexState& s = state.at(*candidate);
        if (s.current_color == s.initial_color) {
            state.flip(*candidate);
            ++stats.flips;
        }
    }
    return StreamColorResult{state.current_coloring(), stats};
}

}  // namespace hgcolor
