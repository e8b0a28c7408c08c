#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"

namespace gencon {

struct SteinerTreeList {
    std::vector<Tree> trees;  // sorted by (edge count, edge list)
    bool truncated = false;
};

/// All subtrees of g that contain s and whose leaves are all terminals,
/// i.e. the inclusion-minimal Steiner trees for s. Stops after `limit` trees
/// and sets `truncated`.
SteinerTreeList enumerate_steiner_trees(const Graph& g, const TerminalSet& s, std::size_t limit);

/// Homeomorphism class of a Steiner tree with interchangeable terminals.
struct ReducedTopology {
    std::string code;
    friend auto operator<=>(const ReducedTopology&, const ReducedTopology&) = default;
};

/// Suppresses non-terminal degree-2 vertices and returns the canonical code of
/// what remains: terminals print as 'T', branch vertices as 'N', children in
/// parentheses, minimized over all roots. Throws if a non-terminal is a leaf.
ReducedTopology classify_topology(const Tree& tree, const TerminalSet& s);

/// Number of distinct reduced topologies among all minimal Steiner trees.
std::size_t count_topologies(const Graph& g, const TerminalSet& s, std::size_t limit = 10'000'000);

/// Same, with the number of trees in each class.
std::map<std::string, std::size_t> topology_histogram(const Graph& g, const TerminalSet& s,
                                                      std::size_t limit = 10'000'000);

}  // namespace gencon
