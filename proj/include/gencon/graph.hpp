#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gencon {

using VertexId = std::int32_t;

/// Raised for malformed input, invalid arguments and broken invariants.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on dense ids 0..order-1.
///
/// Edges are kept in canonical (min,max) form, sorted lexicographically.
/// Self-loops, parallel edges and out-of-range endpoints are rejected at
/// construction.
class Graph {
public:
    Graph() = default;
    Graph(int order, std::vector<Edge> edges,
          std::optional<std::vector<std::string>> labels = std::nullopt);

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(VertexId a, VertexId b) const;
    bool valid_vertex(VertexId v) const { return v >= 0 && v < order_; }

    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

    /// Index of edge {a,b} in edges(), or -1.
    int edge_index(VertexId a, VertexId b) const;

    /// Copy with additional vertices and edges appended.
    Graph extended(int extra_vertices, const std::vector<Edge>& extra_edges) const;
    /// Copy with edge {a,b} added.
    Graph with_edge(VertexId a, VertexId b) const;
    /// Copy with labels replaced.
    Graph with_labels(std::vector<std::string> labels) const;
    /// Copy with vertex v renamed to perm[v].
    Graph relabeled(std::span<const VertexId> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::optional<std::vector<std::string>> labels_;
};

/// Sorted set of distinct terminal vertices, |S| >= 2, valid in its host graph.
class TerminalSet {
public:
    TerminalSet() = default;
    TerminalSet(const Graph& host, std::vector<VertexId> members);

    const std::vector<VertexId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(VertexId v) const;
    VertexId front() const { return members_.front(); }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const TerminalSet&, const TerminalSet&) = default;

private:
    std::vector<VertexId> members_;
};

/// Connected components as sorted vertex lists, ordered by least member.
std::vector<std::vector<VertexId>> components(const Graph& g);

/// Component index per vertex.
std::vector<int> component_ids(const Graph& g);

/// True when every terminal lies in one component.
bool terminals_connected(const Graph& g, const TerminalSet& s);

// Small fixed graphs used by tests, docs and the CLI.
Graph path_graph(int order);
Graph cycle_graph(int order);
Graph complete_graph(int order);
Graph star_graph(int leaves);  // center 0
Graph petersen_graph();

}  // namespace gencon
