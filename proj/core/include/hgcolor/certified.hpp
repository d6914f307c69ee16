#ifndef HGCOLOR_CERTIFIED_HPP
#define HGCOLOR_CERTIFIED_HPP

#include <hgcolor/recolor.hpp>
#include <hgcolor/stream_io.hpp>
#include <hgcolor/tape.hpp>
#include <hgcolor/types.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace hgcolor {

/**
 * Residual guard state. Whenever an arriving edge could later turn entirely
 * blue (its initially-red part is nonempty and every vertex there carries
 * the recoloring bit), that red part is saved and checked against the final
 * coloring; symmetrically for red. Each side's stored vertex total is capped.
 */
struct ResidualStore {
    std::vector<std::vector<VertexId>> blue_residuals;  // parts that must not all turn blue
    std::vector<std::vector<VertexId>> red_residuals;   // parts that must not all turn red
    std::uint64_t blue_size = 0;                        // sum of stored set sizes
    std::uint64_t red_size = 0;
    std::uint64_t peak_total_size = 0;
};

struct CertifiedResult {
    std::variant<Coloring, Failure> outcome;
    RunStats stats;
    ResidualStore residuals;

    bool ok() const { return std::holds_alternative<Coloring>(outcome); }
    const Coloring& coloring() const { return std::get<Coloring>(outcome); }
    const Failure& failure() const { return std::get<Failure>(outcome); }
};

/**
 * Streaming delayed recoloring that never emits an invalid coloring: an
 * initially monochromatic edge with no recoloring bit aborts immediately,
 * residual growth beyond the cap aborts, and the stored residual sets are
 * checked against the final coloring before it is released.
 *
 * cap is the per-side residual budget; defaults to the uniformity n of the
 * first edge seen.
 */
CertifiedResult certified_stream_color(EdgeSource& edges, const VertexTape& tape,
                                       std::optional<std::uint64_t> cap = std::nullopt);

/// Upper bound q * n * p * 2^-n * (1+p)^(n-1) on E[size of one residual side].
double residual_expected_size_bound(std::uint32_t n, double q, double p);

}  // namespace hgcolor

#endif  // HGCOLOR_CERTIFIED_HPP
