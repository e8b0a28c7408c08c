#pragma once

#include <cstdint>
#include <vector>

#include "gencon/bitset.hpp"
#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"

namespace gencon {

/// Exclusive resources a tree connecting S can consume.
///
/// Two internally disjoint trees never share a non-terminal vertex, and never
/// share an edge. An edge with a non-terminal endpoint already belongs to the
/// tree owning that endpoint, so the only edges that need separate accounting
/// are the ones with both ends in S. Resources are numbered non-terminals
/// first (by vertex id), then terminal-terminal edges (by edge order).
class ResourceSpace {
public:
    ResourceSpace(const Graph& g, const TerminalSet& s);

    const Graph& graph() const { return g_; }
    const TerminalSet& terminals() const { return s_; }
    std::size_t size() const { return vertex_of_.size() + edge_of_.size(); }
    Bitset empty_set() const { return Bitset(size()); }
    Bitset full_set() const;

    /// Resource id of a non-terminal vertex, -1 for terminals.
    int vertex_resource(VertexId v) const { return resource_of_vertex_[v]; }
    /// Resource id of a terminal-terminal edge, -1 otherwise.
    int edge_resource(VertexId a, VertexId b) const;
    bool is_vertex_resource(std::size_t r) const { return r < vertex_of_.size(); }
    VertexId resource_vertex(std::size_t r) const { return vertex_of_[r]; }
    Edge resource_edge(std::size_t r) const { return edge_of_[r - vertex_of_.size()]; }

    /// Resources touching the i-th terminal (one per incident edge).
    const Bitset& incident(std::size_t terminal_index) const { return incident_[terminal_index]; }

    /// Vertices reachable from the first terminal using only resources in mask.
    std::vector<char> reach(const Bitset& mask) const;
    /// True when mask alone connects every terminal.
    bool connects(const Bitset& mask) const;
    /// True when mask connects S and no single resource can be dropped.
    bool minimal_connector(const Bitset& mask) const;
    /// Deterministic Steiner tree built from a connecting mask (BFS from the
    /// least terminal, ascending neighbors, non-terminal leaves pruned).
    Tree tree_for(const Bitset& mask) const;

private:
    bool usable(VertexId x, VertexId y, const Bitset& mask) const;

    const Graph& g_;
    const TerminalSet& s_;
    std::vector<int> resource_of_vertex_;
    std::vector<VertexId> vertex_of_;
    std::vector<Edge> edge_of_;
    std::vector<Bitset> incident_;
};

struct ConnectorList {
    std::vector<Bitset> sets;
    bool complete = true;
    std::uint64_t expansions = 0;
};

/// Enumerates every inclusion-minimal resource set that connects S. Each
/// search node counts one expansion; the walk stops incomplete once
/// `budget` expansions are used.
ConnectorList enumerate_minimal_connectors(const ResourceSpace& space, std::uint64_t budget);

}  // namespace gencon
