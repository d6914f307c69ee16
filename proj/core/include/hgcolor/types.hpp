#ifndef HGCOLOR_TYPES_HPP
#define HGCOLOR_TYPES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hgcolor {

using VertexId = std::uint64_t;

// Color classes. Two-coloring code uses kRed/kBlue; k-coloring code uses 0..k-1.
using ColorId = std::uint8_t;
inline constexpr ColorId kRed = 0;
inline constexpr ColorId kBlue = 1;

constexpr ColorId opposite(ColorId c) { return static_cast<ColorId>(c ^ 1u); }

class MissingAssignmentError : public std::runtime_error {
public:
    explicit MissingAssignmentError(VertexId u)
        : std::runtime_error("no color assigned to vertex " + std::to_string(u)) {}
};

class InstanceTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParameterDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A hyperedge: n >= 3 distinct vertices. Stored sorted; edge identity
 * ignores the order vertices arrived in.
 */
class Hyperedge {
public:
    explicit Hyperedge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 3) {
            throw std::invalid_argument("hyperedge needs at least 3 vertices");
        }
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
            throw std::invalid_argument("hyperedge has a repeated vertex");
        }
    }

    Hyperedge(std::initializer_list<VertexId> vertices)
        : Hyperedge(std::vector<VertexId>(vertices)) {}

    std::size_t size() const { return vertices_.size(); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool contains(VertexId u) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), u);
    }

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    bool operator==(const Hyperedge& other) const = default;

private:
    std::vector<VertexId> vertices_;  // sorted, distinct
};

/**
 * An n-uniform hypergraph. Edges form a multiset: a stream may repeat an
 * edge and statistics count multiplicity.
 */
class Hypergraph {
public:
    explicit Hypergraph(std::uint32_t uniformity,
                        std::optional<std::uint64_t> declared_universe = std::nullopt)
        : uniformity_(uniformity), declared_universe_(declared_universe) {
        if (uniformity_ < 3) throw std::invalid_argument("uniformity must be >= 3");
        if (declared_universe_ && *declared_universe_ < uniformity_) {
            throw std::invalid_argument("declared universe smaller than uniformity");
        }
    }

    static Hypergraph from_edges(std::uint32_t uniformity, std::vector<Hyperedge> edges,
                                 std::optional<std::uint64_t> declared_universe = std::nullopt) {
        Hypergraph h(uniformity, declared_universe);
        for (auto& e : edges) h.add_edge(std::move(e));
        return h;
    }

    void add_edge(Hyperedge e) {
        if (e.size() != uniformity_) {
            throw std::invalid_argument("edge arity does not match uniformity");
        }
        if (declared_universe_) {
            for (VertexId u : e) {
                if (u < 1 || u > *declared_universe_) {
                    throw std::invalid_argument("vertex outside declared universe");
                }
            }
        }
        edges_.push_back(std::move(e));
    }

    std::uint32_t uniformity() const { return uniformity_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::optional<std::uint64_t> declared_universe() const { return declared_universe_; }

    // Distinct vertices appearing in edges, ascending.
    std::vector<VertexId> vertex_set() const {
        std::vector<VertexId> vs;
        for (const auto& e : edges_) vs.insert(vs.end(), e.begin(), e.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    // Declared universe size if given, else the size of the vertex union.
    std::uint64_t vertex_count() const {
        if (declared_universe_) return *declared_universe_;
        return vertex_set().size();
    }

private:
    std::uint32_t uniformity_;
    std::vector<Hyperedge> edges_;
    std::optional<std::uint64_t> declared_universe_;
};

/// Total map VertexId -> color class on the vertices it was given.
class Coloring {
public:
    Coloring() = default;

    void assign(VertexId u, ColorId c) { assignment_[u] = c; }

    ColorId at(VertexId u) const {
        auto it = assignment_.find(u);
        if (it == assignment_.end()) throw MissingAssignmentError(u);
        return it->second;
    }

    std::optional<ColorId> find(VertexId u) const {
        auto it = assignment_.find(u);
        if (it == assignment_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(VertexId u) const { return assignment_.count(u) > 0; }
    std::size_t size() const { return assignment_.size(); }

    std::size_t count_color(ColorId c) const {
        std::size_t n = 0;
        for (const auto& [u, col] : assignment_) {
            (void)u;
            if (col == c) ++n;
        }
        return n;
    }

    const std::unordered_map<VertexId, ColorId>& entries() const { return assignment_; }

    bool operator==(const Coloring& other) const { return assignment_ == other.assignment_; }

private:
    std::unordered_map<VertexId, ColorId> assignment_;
};

// Typed failure outcomes for the streaming colorers.
enum class FailureReason {
    UnfixableMonoEdge,
    ResidualOverflowBlue,
    ResidualOverflowRed,
    FinalCheckBlue,
    FinalCheckRed,
    MonochromaticEdge,
    PassBudgetExhausted,
};

// Stable snake_case names used in CLI and CSV output.
std::string_view failure_reason_name(FailureReason reason);
std::optional<FailureReason> failure_reason_from_name(std::string_view name);

struct Failure {
    FailureReason reason;
    std::optional<Hyperedge> witness;  // offending edge, when one exists
};

}  // namespace hgcolor

#endif  // HGCOLOR_TYPES_HPP
