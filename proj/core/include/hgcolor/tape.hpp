#ifndef HGCOLOR_TAPE_HPP
#define HGCOLOR_TAPE_HPP

#include <hgcolor/types.hpp>

#include <cstdint>

namespace hgcolor {

/// Per-vertex randomness triple: initial color, recoloring bit, permutation rank.
struct VertexDraw {
    ColorId initial_color;
    bool recolor_bit;
    std::uint64_t priority;
};

/**
 * Source of per-vertex draws. The contract that makes the offline and
 * streaming recoloring engines bit-for-bit comparable: draw(u) depends only
 * on the tape and u, never on arrival order. The permutation pi is realized
 * as ascending (priority, vertex id) order, which is distributed identically
 * to inserting each vertex at a uniform position.
 */
class VertexTape {
public:
    virtual ~VertexTape() = default;

    virtual VertexDraw draw(VertexId u) const = 0;

    /// The Bernoulli parameter p behind recolor_bit.
    virtual double flip_probability() const = 0;
};

/// Seed-keyed tape: each field is a pseudorandom function of (seed, u, field tag).
class RandomTape final : public VertexTape {
public:
    RandomTape(std::uint64_t seed, double p);

    VertexDraw draw(VertexId u) const override;
    double flip_probability() const override { return p_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    double p_;
};

}  // namespace hgcolor

#endif  // HGCOLOR_TAPE_HPP
