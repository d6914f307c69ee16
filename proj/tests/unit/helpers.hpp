#ifndef HGCOLOR_TEST_HELPERS_HPP
#define HGCOLOR_TEST_HELPERS_HPP

#include <hgcolor/core.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/tape.hpp>
#include <hgcolor/types.hpp>

#include <unordered_map>
#include <vector>

namespace hgtest {

using namespace hgcolor;

/// Tape with explicit per-vertex values, for hand-traced fixtures.
class ScriptedTape final : public VertexTape {
public:
    ScriptedTape& set(VertexId u, ColorId chi0, bool bit, std::uint64_t priority) {
        draws_[u] = VertexDraw{chi0, bit, priority};
        return *this;
    }

    VertexDraw draw(VertexId u) const override { return draws_.at(u); }
    double flip_probability() const override { return 0.5; }

private:
    std::unordered_map<VertexId, VertexDraw> draws_;
};

/// Fano plane on [1,7] with the cyclic lines {i, i+1, i+3} (mod 7).
inline Hypergraph fano_plane() {
    return Hypergraph::from_edges(3, {
                                         Hyperedge{1, 2, 4},
                                         Hyperedge{2, 3, 5},
                                         Hyperedge{3, 4, 6},
                                         Hyperedge{4, 5, 7},
                                         Hyperedge{5, 6, 1},
                                         Hyperedge{6, 7, 2},
                                         Hyperedge{7, 1, 3},
                                     });
}

inline Coloring uniform_coloring(const std::vector<VertexId>& verts, std::uint64_t seed) {
    Coloring chi;
    for (VertexId u : verts) chi.assign(u, prf(seed, u) & 1u ? kBlue : kRed);
    return chi;
}

/// Independent oracle: count monochromatic n-subsets of [1, v] by enumeration.
inline std::uint64_t count_mono_subsets(const Coloring& chi, std::uint64_t v, std::uint32_t n) {
    std::vector<VertexId> pick(n);
    for (std::uint32_t i = 0; i < n; ++i) pick[i] = i + 1;
    std::uint64_t count = 0;
    for (;;) {
        ColorId first = chi.at(pick[0]);
        bool mono = true;
        for (std::uint32_t i = 1; i < n; ++i) {
            if (chi.at(pick[i]) != first) {
                mono = false;
                break;
            }
        }
        if (mono) ++count;
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && pick[i] == v - (n - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (std::uint32_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return count;
}

}  // namespace hgtest

#endif  // HGCOLOR_TEST_HELPERS_HPP
