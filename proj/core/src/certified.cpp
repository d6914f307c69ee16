#include <hgcolor/certified.hpp>

#include <algorithm>
#include <cmath>

namespace hgcolor {

double residual_expected_size_bound(std::uint32_t n, double q, double p) {
    if (n < 3) throw ParameterDomainError("residual bound requires n >= 3");
    if (!(p > 0.0 && p < 1.0)) throw ParameterDomainError("p must lie in (0, 1)");
    if (q < 0.0) throw ParameterDomainError("q must be nonnegative");
    const double dn = n;
    return q * dn * p * std::exp2(-dn) * std::pow(1.0 + p, dn - 1.0);
}

CertifiedResult certified_stream_color(EdgeSource& edges, const VertexTape& tape,
                                       std::optional<std::uint64_t> cap) {
    RecolorState state;
    RunStats stats;
    ResidualStore store;

    auto finish_failure = [&](FailureReason reason, std::optional<Hyperedge> witness) {
        return CertifiedResult{Failure{reason, std::move(witness)}, stats, std::move(store)};
    };

    while (auto edge = edges.next()) {
        ++stats.edges_processed;
        for (VertexId u : *edge) {
            if (state.discover(u, tape)) ++stats.vertices_discovered;
        }
        stats.peak_state_entries = std::max<std::uint64_t>(stats.peak_state_entries, state.size());
        if (!cap) cap = edge->size();

        const ColorId first = state.at(edge->vertices().front()).initial_color;
        const bool mono0 = std::all_of(edge->begin(), edge->end(), [&](VertexId u) {
            return state.at(u).initial_color == first;
        });

        // Guard (a): an initially monochromatic edge no recoloring bit can fix
        // will stay monochromatic forever.
        if (mono0) {
            ++stats.initially_mono_edges;
            const bool fixable = std::any_of(edge->begin(), edge->end(), [&](VertexId u) {
                return state.at(u).recolor_bit;
            });
            if (!fixable) {
                ++stats.no_candidate_events;
                return finish_failure(FailureReason::UnfixableMonoEdge, *edge);
            }
        }

        // Guards (b)/(c): save color parts that could flip wholesale.
        std::vector<VertexId> red_part;
        std::vector<VertexId> blue_part;
        bool red_all_bits = true;
        bool blue_all_bits = true;
        for (VertexId u : *edge) {
            const VertexState& s = state.at(u);
            if (s.initial_color == kRed) {
                red_part.push_back(u);
                red_all_bits &= s.recolor_bit;
            } else {
                blue_part.push_back(u);
                blue_all_bits &= s.recolor_bit;
            }
        }
        if (!red_part.empty() && red_all_bits) {
            if (store.blue_size + red_part.size() > *cap) {
                return finish_failure(FailureReason::ResidualOverflowBlue, *edge);
            }
            store.blue_size += red_part.size();
            store.blue_residuals.push_back(std::move(red_part));
        }
        if (!blue_part.empty() && blue_all_bits) {
            if (store.red_size + blue_part.size() > *cap) {
                return finish_failure(FailureReason::ResidualOverflowRed, *edge);
            }
            store.red_size += blue_part.size();
            store.red_residuals.push_back(std::move(blue_part));
        }
        store.peak_total_size =
            std::max(store.peak_total_size, store.blue_size + store.red_size);

        // Recoloring step, identical to the plain streaming engine.
        if (mono0) {
            if (const auto candidate = first_flippable(*edge, state)) {
                const VertexState& s = state.at(*candidate);
                if (s.current_color == s.initial_color) {
                    state.flip(*candidate);
                    ++stats.flips;
                }
            }
        }
    }

    // Final check: no stored part may have flipped wholesale.
    auto all_color = [&](const std::vector<VertexId>& part, ColorId c) {
        return std::all_of(part.begin(), part.end(),
                           [&](VertexId u) { return state.at(u).current_color == c; });
    };
    for (const auto& part : store.blue_residuals) {
        if (all_color(part, kBlue)) {
            return finish_failure(FailureReason::FinalCheckBlue, std::nullopt);
        }
    }
    for (const auto& part : store.red_residuals) {
        if (all_color(part, kRed)) {
            return finish_failure(FailureReason::FinalCheckRed, std::nullopt);
        }
    }
    return CertifiedResult{state.current_coloring(), stats, std::move(store)};
}

}  // namespace hgcolor
