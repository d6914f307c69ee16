#include <hgcolor/prf.hpp>
#include <hgcolor/tape.hpp>

namespace hgcolor {

namespace {
constexpr std::uint64_t kFieldInitialColor = 1;
constexpr std::uint64_t kFieldRecolorBit = 2;
constexpr std::uint64_t kFieldPriority = 3;
}  // namespace

RandomTape::RandomTape(std::uint64_t seed, double p) : seed_(seed), p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterDomainError("flip probability outside [0, 1]");
}

VertexDraw RandomTape::draw(VertexId u) const {
    VertexDraw d;
    d.initial_color = prf(seed_, u, kFieldInitialColor) & 1u ? kBlue : kRed;
    d.recolor_bit = unit_interval(prf(seed_, u, kFieldRecolorBit)) < p_;
    d.priority = prf(seed_, u, kFieldPriority);
    return d;
}

}  // namespace hgcolor
