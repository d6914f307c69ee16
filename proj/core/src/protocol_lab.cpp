#include <hgcolor/binomial.hpp>
#include <hgcolor/core.hpp>
#include <hgcolor/prf.hpp>
#include <hgcolor/protocol_lab.hpp>

#include <cmath>

namespace hgcolor {

namespace {
constexpr std::uint64_t kListStream = 0x70726f746f2d6c73ull;  // "proto-ls"
}

ListCollection gen_list_collection(std::uint64_t v, std::uint32_t n, std::uint32_t edge_cap,
                                   std::uint32_t list_count, std::uint32_t list_length,
                                   std::uint64_t seed) {
    if (list_count < 1 || list_length < 1) {
        throw ParameterDomainError("need at least one list with one coloring");
    }
    ListCollection c;
    c.universe = v;
    c.uniformity = n;
    c.edge_cap = edge_cap;
    c.seed = seed;
    c.lists.resize(list_count);
    for (std::uint32_t i = 0; i < list_count; ++i) {
        c.lists[i].reserve(list_length);
        for (std::uint32_t j = 0; j < list_length; ++j) {
            Coloring chi;
            for (VertexId u = 1; u <= v; ++u) {
                chi.assign(u, prf(seed, kListStream, (static_cast<std::uint64_t>(i) << 32) | j,
                                  u) & 1u
                                  ? kBlue
                                  : kRed);
            }
            c.lists[i].push_back(std::move(chi));
        }
    }
    return c;
}

LemmaListParams lemma_list_params(std::uint32_t n, std::uint64_t v) {
    if (n < 3 || v < 2) throw ParameterDomainError("need n >= 3 and v >= 2");
    const double k = std::ceil(6.0 * std::exp2(static_cast<double>(n) / 2.0) *
                               std::log2(static_cast<double>(v)));
    return LemmaListParams{1ull << n, static_cast<std::uint64_t>(k)};
}

std::optional<std::size_t> alice_message(const Hypergraph& ha, const ListCollection& c) {
    for (std::size_t i = 0; i < c.lists.size(); ++i) {
        bool all_valid = true;
        for (const Coloring& chi : c.lists[i]) {
            if (!validate_coloring(ha, chi).empty()) {
                all_valid = false;
                break;
            }
        }
        if (all_valid) return i;
    }
    return std::nullopt;
}

std::optional<Coloring> bob_answer(const Hypergraph& hb, const std::vector<Coloring>& list) {
    for (const Coloring& chi : list) {
        if (validate_coloring(hb, chi).empty()) return chi;
    }
    return std::nullopt;
}

std::vector<Hyperedge> enumerate_edges(std::uint64_t v, std::uint32_t n) {
    if (v < n) throw ParameterDomainError("need v >= n");
    std::vector<Hyperedge> out;
    std::vector<VertexId> pick(n);
    for (std::uint32_t i = 0; i < n; ++i) pick[i] = i + 1;
    for (;;) {
        out.emplace_back(pick);
        // next lexicographic n-subset of [1, v]
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && pick[i] == v - (n - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Goodness verify_goodness(const ListCollection& c) {
    const BigInt edge_space = binomial(c.universe, c.uniformity);
    if (edge_space > 20 || c.edge_cap > 2) {
        throw InstanceTooLargeError("goodness check limited to C(v, n) <= 20 and edge_cap <= 2");
    }
    if (c.edge_cap < 1) {
        throw ParameterDomainError("edge_cap must be >= 1 for the goodness check");
    }

    const std::vector<Hyperedge> all_edges = enumerate_edges(c.universe, c.uniformity);
    const std::size_t m = all_edges.size();

    // All hypergraphs with exactly edge_cap edges (index combinations).
    std::vector<Hypergraph> hypergraphs;
    if (c.edge_cap == 1) {
        for (const auto& e : all_edges) {
            hypergraphs.push_back(Hypergraph::from_edges(c.uniformity, {e}, c.universe));
        }
    } else {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                hypergraphs.push_back(Hypergraph::from_edges(
                    c.uniformity, {all_edges[a], all_edges[b]}, c.universe));
            }
        }
    }

    Goodness result{true, true};
    for (const Hypergraph& h : hypergraphs) {
        bool some_list_all_valid = false;
        for (const auto& list : c.lists) {
            bool any_valid = false;
            bool all_valid = true;
            for (const Coloring& chi : list) {
                if (validate_coloring(h, chi).empty()) {
                    any_valid = true;
                } else {
                    all_valid = false;
                }
            }
            if (!any_valid) result.good_for_bob = false;
            if (all_valid) some_list_all_valid = true;
        }
        if (!some_list_all_valid) result.good_for_alice = false;
        if (!result.good_for_alice && !result.good_for_bob) break;
    }
    return result;
}

}  // namespace hgcolor
