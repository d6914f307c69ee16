#include <hgcolor/core.hpp>

#include <algorithm>
#include <unordered_map>

namespace hgcolor {

std::string_view failure_reason_name(FailureReason reason) {
    switch (reason) {
        case FailureReason::UnfixableMonoEdge: return "unfixable_mono_edge";
        case FailureReason::ResidualOverflowBlue: return "residual_overflow_blue";
        case FailureReason::ResidualOverflowRed: return "residual_overflow_red";
        case FailureReason::FinalCheckBlue: return "final_check_blue";
        case FailureReason::FinalCheckRed: return "final_check_red";
        case FailureReason::MonochromaticEdge: return "monochromatic_edge";
        case FailureReason::PassBudgetExhausted: return "pass_budget_exhausted";
    }
    return "unknown_failure";
}

std::optional<FailureReason> failure_reason_from_name(std::string_view name) {
    for (FailureReason r : {FailureReason::UnfixableMonoEdge, FailureReason::ResidualOverflowBlue,
                            FailureReason::ResidualOverflowRed, FailureReason::FinalCheckBlue,
                            FailureReason::FinalCheckRed, FailureReason::MonochromaticEdge,
                            FailureReason::PassBudgetExhausted}) {
        if (failure_reason_name(r) == name) return r;
    }
    return std::nullopt;
}

bool is_monochromatic(const Hyperedge& edge, const Coloring& coloring) {
    const ColorId first = coloring.at(edge.vertices().front());
    for (std::size_t i = 1; i < edge.size(); ++i) {
        if (coloring.at(edge.vertices()[i]) != first) return false;
    }
    return true;
}

std::vector<Hyperedge> validate_coloring(const Hypergraph& h, const Coloring& coloring) {
    std::vector<Hyperedge> violations;
    for (const auto& e : h.edges()) {
        if (is_monochromatic(e, coloring)) violations.push_back(e);
    }
    return violations;
}

std::optional<Coloring> brute_force_two_colorable(const Hypergraph& h) {
    const std::vector<VertexId> verts = h.vertex_set();
    const std::size_t v = verts.size();
    if (v > kBruteForceVertexLimit) {
        throw InstanceTooLargeError("brute-force oracle limited to " +
                                    std::to_string(kBruteForceVertexLimit) + " vertices, got " +
                                    std::to_string(v));
    }

    std::unordered_map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < v; ++i) index[verts[i]] = i;

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::uint32_t mask = 0;
        for (VertexId u : e) mask |= 1u << index[u];
        edge_masks.push_back(mask);
    }

    auto emit = [&](std::uint32_t assignment) {
        Coloring chi;
        for (std::size_t i = 0; i < v; ++i) {
            chi.assign(verts[i], (assignment >> i) & 1u ? kBlue : kRed);
        }
        return chi;
    };

    if (edge_masks.empty()) return emit(0);  // all red

    // Fix the lowest vertex red: valid colorings come in complement pairs.
    const std::uint64_t count = v == 0 ? 1 : 1ull << (v - 1);
    for (std::uint64_t assignment = 0; assignment < count; ++assignment) {
        bool ok = true;
        for (std::uint32_t mask : edge_masks) {
            const std::uint32_t inside = static_cast<std::uint32_t>(assignment) & mask;
            if (inside == 0 || inside == mask) {
                ok = false;
                break;
            }
        }
        if (ok) return emit(static_cast<std::uint32_t>(assignment));
    }
    return std::nullopt;
}

BigInt shadow_size(std::uint64_t red_count, std::uint64_t v, std::uint32_t n) {
    if (red_count > v) throw ParameterDomainError("red_count exceeds vertex count");
    return binomial(red_count, n) + binomial(v - red_count, n);
}

std::uint64_t max_edge_intersections(const Hypergraph& h) {
    const auto& edges = h.edges();
    if (edges.empty()) return 0;

    std::unordered_map<VertexId, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (VertexId u : edges[i]) incident[u].push_back(i);
    }

    std::vector<std::size_t> last_seen(edges.size(), SIZE_MAX);
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::uint64_t count = 0;
        for (VertexId u : edges[i]) {
            for (std::size_t j : incident[u]) {
                if (j != i && last_seen[j] != i) {
                    last_seen[j] = i;
                    ++count;
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

}  // namespace hgcolor
