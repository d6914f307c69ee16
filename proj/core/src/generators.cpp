#include <hgcolor/generators.hpp>
#include <hgcolor/prf.hpp>

#include <cmath>
#include <unordered_set>

namespace hgcolor {

namespace {
constexpr std::uint64_t kUniformEdgeStream = 0x67656e2d756e6966ull;  // "gen-unif"
constexpr std::uint64_t kErdosStream = 0x67656e2d65726473ull;        // "gen-erds"
}  // namespace

Hyperedge uniform_random_edge(std::uint64_t v, std::uint32_t n, std::uint64_t seed,
                              std::uint64_t index) {
    CounterRng rng(prf(seed, kUniformEdgeStream, index));
    std::vector<VertexId> picked;
    picked.reserve(n);
    std::unordered_set<VertexId> seen;
    while (picked.size() < n) {
        const VertexId u = uniform_below(rng, v) + 1;
        if (seen.insert(u).second) picked.push_back(u);
    }
    return Hyperedge(std::move(picked));
}

std::vector<Hyperedge> gen_uniform_random(std::uint64_t v, std::uint32_t n, std::uint64_t q,
                                          std::uint64_t seed) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (v < n) throw ParameterDomainError("need v >= n vertices");
    std::vector<Hyperedge> edges;
    edges.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) edges.push_back(uniform_random_edge(v, n, seed, i));
    return edges;
}

ErdosParams erdos_params(std::uint32_t n, std::uint32_t t) {
    if (n < 3) throw ParameterDomainError("uniformity must be >= 3");
    if (t < 1) throw ParameterDomainError("t must be >= 1");
    // t <= n^2/(2n-1) keeps N = floor(n^2/t) >= 2n-1; t < n/2 keeps q finite.
    if (static_cast<std::uint64_t>(t) * (2ull * n - 1) > static_cast<std::uint64_t>(n) * n) {
        throw ParameterDomainError("t exceeds n^2/(2n-1)");
    }
    if (2ull * t >= n) throw ParameterDomainError("t must be < n/2");
    const std::uint64_t universe = static_cast<std::uint64_t>(n) * n / t;
    if (universe < 2ull * n - 1) throw ParameterDomainError("universe smaller than 2n-1");

    const double dn = n;
    const double dt = t;
    const double q_real =
        static_cast<double>(universe) * std::exp2(dn) * std::exp(dt * dn / (dn - 2 * dt)) *
        std::log(2.0);
    if (!(q_real < 9e18)) throw ParameterDomainError("edge count overflows 64 bits");
    return ErdosParams{universe, static_cast<std::uint64_t>(std::ceil(q_real))};
}

ErdosInstance gen_erdos(std::uint32_t n, std::uint32_t t, std::uint64_t seed) {
    const ErdosParams params = erdos_params(n, t);
    ErdosInstance out{params, {}};
    out.edges.reserve(params.edge_count);
    const std::uint64_t edge_seed = prf(seed, kErdosStream);
    for (std::uint64_t i = 0; i < params.edge_count; ++i) {
        out.edges.push_back(uniform_random_edge(params.universe, n, edge_seed, i));
    }
    return out;
}

}  // namespace hgcolor
