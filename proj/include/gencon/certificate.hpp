#pragma once

#include <string>
#include <vector>

#include "gencon/graph.hpp"

namespace gencon {

/// A subtree of a host graph: sorted vertex list and sorted edge list.
struct Tree {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;

    /// Builds a tree from its edges; vertices are the edge endpoints.
    static Tree from_edges(std::vector<Edge> edges);
    void normalize();

    friend auto operator<=>(const Tree& a, const Tree& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() <=> b.edges.size();
        if (auto c = a.edges <=> b.edges; c != 0) return c;
        return a.vertices <=> b.vertices;
    }
    friend bool operator==(const Tree&, const Tree&) = default;
};

/// An internally disjoint family of trees connecting S.
struct TreeCertificate {
    std::vector<Tree> trees;

    std::size_t size() const { return trees.size(); }
    /// Sorts trees by (edge count, edge list) so equal families compare equal.
    void canonicalize();

    friend bool operator==(const TreeCertificate&, const TreeCertificate&) = default;
};

struct VerifyReport {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks every internally-disjoint-tree condition: each tree is a tree of G
/// containing S, the trees are pairwise edge-disjoint, and any two trees share
/// exactly the vertices of S. Violations are listed in discovery order.
VerifyReport verify_certificate(const Graph& g, const TerminalSet& s, const TreeCertificate& cert);

}  // namespace gencon
