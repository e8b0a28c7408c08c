#pragma once

#include <vector>

#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"

namespace gencon {

/// Largest graph the brute-force oracle accepts by default.
inline constexpr int kOracleOrderCap = 9;

/// Every subtree of g that contains s and has only terminal leaves, found by
/// trying each vertex superset U of S and each (|U|-1)-edge subset of G[U].
/// Shares no code with the solver. Sorted by (edge count, edge list).
std::vector<Tree> oracle_steiner_trees(const Graph& g, const TerminalSet& s, int cap = kOracleOrderCap);
/// Serial reference for oracle_steiner_trees (which runs in parallel).
std::vector<Tree> oracle_steiner_trees_serial(const Graph& g, const TerminalSet& s, int cap = kOracleOrderCap);

/// kappa(S) by exhaustive search over all packings of oracle_steiner_trees.
int brute_force_kappa(const Graph& g, const TerminalSet& s, int cap = kOracleOrderCap);

}  // namespace gencon
