#ifndef SUNFIND_GRAPH_HPP
#define SUNFIND_GRAPH_HPP

#include <sunfind/bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sunfind {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

/// Raised by parse_graph; the message carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts the input; throws std::invalid_argument on duplicates or negative members.
    VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    bool contains(Vertex v) const;
    const std::vector<Vertex> & members() const { return members_; }

    bool operator==(const VertexSet &) const = default;

private:
    std::vector<Vertex> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept strictly ascending, and an adjacency bit matrix is kept
/// alongside them so that `adjacent` is constant time.
class Graph {
public:
    Graph() = default;
    /// Builds the canonical graph; duplicate edges collapse. Throws std::invalid_argument
    /// on self-loops or endpoints outside [0, n).
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    std::size_t size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    const Bitset & neighbor_bits(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    /// All edges with u < v, ascending.
    std::vector<Edge> edges() const;

    bool operator==(const Graph & other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> rows_;
};

struct InducedSubgraph {
    Graph graph;
    /// original_of[i] is the host vertex that became vertex i.
    std::vector<Vertex> original_of;
};

Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph & g);

/// Throws std::out_of_range if a member of s is not a vertex of g.
InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s);
Graph complement(const Graph & g);

bool is_clique(const Graph & g, const VertexSet & s);
bool is_stable(const Graph & g, const VertexSet & s);

/// Lexicographically least triangle, if any.
std::optional<VertexSet> find_triangle(const Graph & g);

/// Rejection generator: draws uniformly random vertex pairs and keeps a pair iff it is
/// new and closes no triangle. Stops after target_edges acceptances or
/// 50 * target_edges draws.
Graph random_triangle_free(int n, std::size_t target_edges, std::uint64_t seed);

/// Erdos-Renyi G(n, p) sample.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// The labeled graph whose edge set is selected by bit i of mask, pairs taken in
/// ascending (u, v) order. Requires n * (n - 1) / 2 <= 64.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::size_t pair_count(int n);

namespace graphs {
    Graph empty(int n);
    Graph complete(int n);
    Graph path(int n);
    Graph cycle(int n);
    Graph petersen();
    /// Two squares sharing an edge.
    Graph domino();
}

} // namespace sunfind

#endif
