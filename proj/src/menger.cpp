#include "gencon/menger.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace gencon {

namespace {

struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNetwork(int nodes) : out(nodes) {}

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    // Edmonds-Karp; capacities here are tiny so this is plenty.
    int max_flow(int source, int sink) {
        int flow = 0;
        std::vector<int> via(out.size());
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(source);
            via[source] = -2;
            while (!q.empty() && via[sink] == -1) {
                int x = q.front();
                q.pop();
                for (int a : out[x])
                    if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
                        via[arcs[a].to] = a;
                        q.push(arcs[a].to);
                    }
            }
            if (via[sink] == -1) return flow;
            int push = std::numeric_limits<int>::max();
            for (int x = sink; x != source; x = arcs[via[x] ^ 1].to) push = std::min(push, arcs[via[x]].cap);
            for (int x = sink; x != source; x = arcs[via[x] ^ 1].to) {
                arcs[via[x]].cap -= push;
                arcs[via[x] ^ 1].cap += push;
            }
            flow += push;
        }
    }
};

}  // namespace

int menger_pair(const Graph& g, VertexId u, VertexId v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw Error("vertex out of range");
    if (u == v) throw Error("menger_pair needs two distinct vertices");
    // vertex x splits into in = 2x and out = 2x+1
    const int big = g.order() + 1;
    FlowNetwork net(2 * g.order());
    for (VertexId x = 0; x < g.order(); ++x) net.add(2 * x, 2 * x + 1, (x == u || x == v) ? big : 1);
    for (const Edge& e : g.edges()) {
        net.add(2 * e.u + 1, 2 * e.v, 1);
        net.add(2 * e.v + 1, 2 * e.u, 1);
    }
    return net.max_flow(2 * u + 1, 2 * v);
}

int vertex_connectivity(const Graph& g) {
    if (g.order() < 2) return 0;
    int best = g.order() - 1;
    for (VertexId a = 0; a < g.order(); ++a)
        for (VertexId b = a + 1; b < g.order(); ++b)
            best = std::min(best, menger_pair(g, a, b));
    return best;
}

}  // namespace gencon
