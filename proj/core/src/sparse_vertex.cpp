#include <hgcolor/binomial.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/sparse_vertex.hpp>

#include <cmath>
#include <limits>

namespace hgcolor {

namespace {
constexpr std::uint64_t kSplitStream = 0x62616c2d73706c74ull;  // "bal-splt"
}

double mono_prob_exact(std::uint64_t v, std::uint32_t n) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (v < n) throw ParameterDomainError("need v >= n");
    const BigInt numerator = binomial((v + 1) / 2, n) + binomial(v / 2, n);
    return big_ratio(numerator, binomial(v, n));
}

double mono_prob_bound(std::uint64_t v, std::uint32_t n) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (v < n) throw ParameterDomainError("need v >= n");
    const double m = static_cast<double>(n) - 1.0;
    return std::exp2(-m) * std::exp(-m * m / (2.0 * static_cast<double>(v)));
}

Coloring make_k_split(std::uint64_t v, std::uint32_t k, std::uint64_t seed) {
    if (k < 2) throw ParameterDomainError("need at least 2 classes");
    if (k > 255) throw ParameterDomainError("at most 255 classes");
    if (v < k) throw ParameterDomainError("need v >= k");

    CounterRng rng(seed, kSplitStream);
    const std::vector<std::uint64_t> order = shuffled_identity(v, rng);

    // First (v mod k) classes get ceil(v/k), the rest floor(v/k).
    Coloring chi;
    const std::uint64_t base = v / k;
    const std::uint64_t extra = v % k;
    std::size_t pos = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
        const std::uint64_t len = base + (c < extra ? 1 : 0);
        for (std::uint64_t i = 0; i < len; ++i) {
            chi.assign(order[pos++], static_cast<ColorId>(c));
        }
    }
    return chi;
}

Coloring make_balanced_split(std::uint64_t v, std::uint64_t seed) {
    return make_k_split(v, 2, seed);
}

SplitColorResult k_balanced_stream_color(EdgeSource& edges, std::uint64_t v, std::uint32_t n,
                                         std::uint32_t k, std::uint64_t seed) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (v < n) throw ParameterDomainError("need v >= n");
    const Coloring split = make_k_split(v, k, seed);

    SplitColorResult result;
    while (auto edge = edges.next()) {
        ++result.edges_processed;
        if (edge->size() != n) throw ParameterDomainError("edge arity does not match n");
        bool mono = true;
        std::optional<ColorId> cls;
        for (VertexId u : *edge) {
            if (u < 1 || u > v) {
                throw ParameterDomainError("vertex " + std::to_string(u) +
                                           " outside the declared universe");
            }
            const ColorId c = split.at(u);
            if (!cls) {
                cls = c;
            } else if (*cls != c) {
                mono = false;
            }
        }
        if (mono) {
            result.failure_position = result.edges_processed;
            result.outcome = Failure{FailureReason::MonochromaticEdge, *edge};
            return result;
        }
    }
    result.outcome = split;
    return result;
}

SplitColorResult balanced_stream_color(EdgeSource& edges, std::uint64_t v, std::uint32_t n,
                                       std::uint64_t seed) {
    return k_balanced_stream_color(edges, v, n, 2, seed);
}

namespace {

double safe_exp(double x) {
    if (x == std::numeric_limits<double>::infinity()) return x;
    return std::exp(x);
}

void check_t_domain(std::uint32_t n, std::uint32_t t, std::uint32_t k) {
    if (t < 4) throw ParameterDomainError("t must be >= 4");
    // n^2/t >= kn-1, i.e. the universe supports nontrivial k-colorings.
    if (static_cast<std::uint64_t>(t) * (static_cast<std::uint64_t>(k) * n - 1) >
        static_cast<std::uint64_t>(n) * n) {
        throw ParameterDomainError("t exceeds n^2/(kn-1)");
    }
}

}  // namespace

MBounds m_bounds(std::uint32_t n, std::uint32_t t) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    check_t_domain(n, t, 2);
    const double dn = n;
    const double dt = t;
    const double lower = std::exp2(dn - 1.0) * std::exp(dt / 8.0);
    const double den = dn - 2.0 * dt;
    const double upper =
        den <= 0.0 ? std::numeric_limits<double>::infinity()
                   : (dn * dn / dt) * std::exp2(dn) * safe_exp(dt * dn / den);
    return MBounds{lower, upper};
}

MBounds mk_bounds(std::uint32_t n, std::uint32_t t, std::uint32_t k) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (k < 2) throw ParameterDomainError("need at least 2 colors");
    check_t_domain(n, t, k);
    const double dn = n;
    const double dt = t;
    const double dk = k;
    const double lower = std::pow(dk, dn - 1.0) * std::exp(-(dk - 1.0) * dt / 2.0);
    const double den = dn - dk * dt;
    const double upper = den <= 0.0
                             ? std::numeric_limits<double>::infinity()
                             : (dn * dn / dt) * std::pow(dk, dn) *
                                   safe_exp((dk - 1.0) * dt * dn / den);
    return MBounds{lower, upper};
}

}  // namespace hgcolor
