#include <hgcolor/core.hpp>
#include <hgcolor/local_lemma.hpp>
#include <hgcolor/prf.hpp>

#include <cmath>
#include <unordered_map>

namespace hgcolor {

namespace {
constexpr std::uint64_t kResampleStream = 0x6c6c6c2d72736d70ull;  // "lll-rsmp"

struct LocalVertex {
    ColorId color;
    std::uint64_t draws = 0;         // occurrence counter for this vertex
    std::uint64_t touched_pass = 0;  // resample pass that last touched it (0 = never)
};
}  // namespace

std::uint64_t default_max_passes(std::uint64_t v) {
    return static_cast<std::uint64_t>(std::ceil(4.0 * std::log2(static_cast<double>(v) + 2.0)));
}

double local_intersection_threshold(std::uint32_t n, double epsilon) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw ParameterDomainError("epsilon must lie in [0, 1)");
    }
    return (1.0 - epsilon) * std::exp2(static_cast<double>(n) - 1.0) / std::exp(1.0) - 1.0;
}

bool check_local_precondition(const Hypergraph& h, double epsilon) {
    const std::uint64_t intersections = max_edge_intersections(h);
    // A matching (no intersections at all) is trivially colorable even where
    // the threshold dips below zero.
    if (intersections == 0) {
        (void)local_intersection_threshold(h.uniformity(), epsilon);  // domain check
        return true;
    }
    return static_cast<double>(intersections) <=
           local_intersection_threshold(h.uniformity(), epsilon);
}

LocalResult local_stream_color(EdgeSource& edges, std::uint32_t n, std::uint64_t seed,
                               std::uint64_t max_passes) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (max_passes < 1) throw ParameterDomainError("need max_passes >= 1");

    std::unordered_map<VertexId, LocalVertex> table;
    LocalStats stats;
    const std::uint64_t run_key = prf(seed, kResampleStream);

    // Fresh uniform color from (seed, pass, vertex, occurrence counter).
    auto fresh_color = [&](VertexId u, std::uint64_t pass) {
        LocalVertex& s = table[u];
        s.color = prf(run_key, pass, u, s.draws++) & 1u ? kBlue : kRed;
        return s.color;
    };

    // Pass 0: color vertices at first sight, observe violations, no resampling.
    std::uint64_t mono_seen = 0;
    while (auto edge = edges.next()) {
        if (edge->size() != n) throw ParameterDomainError("edge arity does not match n");
        bool mono = true;
        std::optional<ColorId> first;
        for (VertexId u : *edge) {
            auto it = table.find(u);
            const ColorId c = it == table.end() ? fresh_color(u, 0) : it->second.color;
            if (!first) {
                first = c;
            } else if (*first != c) {
                mono = false;
            }
        }
        if (mono) ++mono_seen;
    }
    stats.passes = 1;
    stats.vertices_discovered = table.size();
    stats.mono_last_pass = mono_seen;

    // Resampling passes. A pass observing zero monochromatic edges performed
    // no resampling, so it doubles as the verification pass.
    while (mono_seen != 0 && stats.passes < max_passes) {
        edges.rewind();
        const std::uint64_t pass = stats.passes;  // resample passes are 1, 2, ...
        mono_seen = 0;
        while (auto edge = edges.next()) {
            bool mono = true;
            bool untouched = true;
            std::optional<ColorId> first;
            for (VertexId u : *edge) {
                const LocalVertex& s = table.at(u);
                if (s.touched_pass == pass) untouched = false;
                if (!first) {
                    first = s.color;
                } else if (*first != s.color) {
                    mono = false;
                }
            }
            if (!mono) continue;
            ++mono_seen;
            if (!untouched) continue;
            for (VertexId u : *edge) {
                fresh_color(u, pass);
                table[u].touched_pass = pass;
                ++stats.resamples;
            }
        }
        ++stats.passes;
        stats.mono_last_pass = mono_seen;
    }

    if (mono_seen != 0) {
        return LocalResult{Failure{FailureReason::PassBudgetExhausted, std::nullopt}, stats};
    }
    Coloring chi;
    for (const auto& [u, s] : table) chi.assign(u, s.color);
    return LocalResult{std::move(chi), stats};
}

}  // namespace hgcolor
