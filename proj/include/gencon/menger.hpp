#pragma once

#include "gencon/graph.hpp"

namespace gencon {

/// Maximum number of internally disjoint u-v paths, by unit vertex-capacity
/// max flow on the split graph. A direct u-v edge counts as one path.
int menger_pair(const Graph& g, VertexId u, VertexId v);

/// Vertex connectivity as the minimum of menger_pair over all pairs.
int vertex_connectivity(const Graph& g);

}  // namespace gencon
