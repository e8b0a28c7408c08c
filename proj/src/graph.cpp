#include "gencon/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gencon {

Graph::Graph(int order, std::vector<Edge> edges, std::optional<std::vector<std::string>> labels)
    : order_(order), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (order_ < 0) throw Error("negative order");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!valid_vertex(e.u) || !valid_vertex(e.v))
            throw Error("edge " + std::to_string(i) + ": endpoint out of range");
        if (e.u == e.v) throw Error("edge " + std::to_string(i) + ": self-loop at " + std::to_string(e.u));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");

    if (labels_) {
        if (static_cast<int>(labels_->size()) != order_) throw Error("label count does not match order");
        std::set<std::string> seen;
        for (const auto& l : *labels_)
            if (!seen.insert(l).second) throw Error("duplicate label \"" + l + "\"");
    }

    adj_.assign(order_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (!valid_vertex(a) || !valid_vertex(b)) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::edge_index(VertexId a, VertexId b) const {
    if (a == b) return -1;
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::extended(int extra_vertices, const std::vector<Edge>& extra_edges) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra_edges.begin(), extra_edges.end());
    std::optional<std::vector<std::string>> labels;
    if (labels_) {
        labels = *labels_;
        for (int i = 0; i < extra_vertices; ++i) labels->push_back("#" + std::to_string(order_ + i));
    }
    return Graph(order_ + extra_vertices, std::move(all), std::move(labels));
}

Graph Graph::with_edge(VertexId a, VertexId b) const {
    std::vector<Edge> all = edges_;
    all.emplace_back(a, b);
    return Graph(order_, std::move(all), labels_);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    return Graph(order_, edges_, std::move(labels));
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
    if (static_cast<int>(perm.size()) != order_) throw Error("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
    std::optional<std::vector<std::string>> labels;
    if (labels_) {
        labels.emplace(order_);
        for (int v = 0; v < order_; ++v) (*labels)[perm[v]] = (*labels_)[v];
    }
    return Graph(order_, std::move(mapped), std::move(labels));
}

TerminalSet::TerminalSet(const Graph& host, std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw Error("terminal set has repeated vertices");
    if (members_.size() < 2) throw Error("terminal set needs at least 2 vertices");
    for (VertexId v : members_)
        if (!host.valid_vertex(v)) throw Error("terminal " + std::to_string(v) + " is not a vertex");
}

bool TerminalSet::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    int next = 0;
    std::vector<VertexId> stack;
    for (VertexId r = 0; r < g.order(); ++r) {
        if (comp[r] != -1) continue;
        comp[r] = next;
        stack.push_back(r);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : g.neighbors(x))
                if (comp[y] == -1) {
                    comp[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    return comp;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    auto comp = component_ids(g);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<VertexId>> out(count);
    for (VertexId v = 0; v < g.order(); ++v) out[comp[v]].push_back(v);
    return out;
}

bool terminals_connected(const Graph& g, const TerminalSet& s) {
    auto comp = component_ids(g);
    return std::all_of(s.begin(), s.end(), [&](VertexId v) { return comp[v] == comp[s.front()]; });
}

Graph path_graph(int order) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < order; ++i) e.emplace_back(i, i + 1);
    return Graph(order, std::move(e));
}

Graph cycle_graph(int order) {
    std::vector<Edge> e;
    for (int i = 0; i < order; ++i) e.emplace_back(i, (i + 1) % order);
    return Graph(order, std::move(e));
}

Graph complete_graph(int order) {
    std::vector<Edge> e;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) e.emplace_back(i, j);
    return Graph(order, std::move(e));
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, std::move(e));
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::move(e));
}

}  // namespace gencon
