#include "gencon/steiner.hpp"

#include <algorithm>
#include <functional>

namespace gencon {

namespace {

// Grows subtrees from the least terminal by include/exclude branching on
// frontier edges. Each subtree containing the root is reached exactly once.
class TreeGrower {
public:
    TreeGrower(const Graph& g, const TerminalSet& s, std::size_t limit)
        : g_(g), s_(s), limit_(limit), in_tree_(g.order(), 0), tree_deg_(g.order(), 0),
          excluded_(g.edge_count(), 0), chosen_(g.edge_count(), 0) {}

    SteinerTreeList run() {
        in_tree_[s_.front()] = 1;
        members_.push_back(s_.front());
        recurse();
        std::sort(out_.trees.begin(), out_.trees.end());
        return std::move(out_);
    }

private:
    bool terminal(VertexId v) const { return s_.contains(v); }

    bool all_terminals_in() const {
        return std::all_of(s_.begin(), s_.end(), [&](VertexId v) { return in_tree_[v]; });
    }

    bool undecided(int e) const { return !excluded_[e] && !chosen_[e]; }

    int frontier_edge() const {
        const auto& edges = g_.edges();
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (undecided(e) && (in_tree_[edges[e].u] != in_tree_[edges[e].v])) return e;
        return -1;
    }

    // Missing terminals must stay reachable through undecided edges into
    // vertices outside the tree.
    bool terminals_reachable() const {
        std::vector<char> seen(in_tree_.begin(), in_tree_.end());
        std::vector<VertexId> stack(members_.begin(), members_.end());
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : g_.neighbors(x)) {
                if (seen[y]) continue;
                if (excluded_[g_.edge_index(x, y)]) continue;
                seen[y] = 1;
                stack.push_back(y);
            }
        }
        return std::all_of(s_.begin(), s_.end(), [&](VertexId v) { return seen[v]; });
    }

    // A non-terminal of tree degree 1 needs another undecided edge leaving the tree.
    bool dead_end() const {
        for (VertexId x : members_) {
            if (terminal(x) || tree_deg_[x] >= 2) continue;
            bool open = false;
            for (VertexId y : g_.neighbors(x))
                if (!in_tree_[y] && undecided(g_.edge_index(x, y))) {
                    open = true;
                    break;
                }
            if (!open) return true;
        }
        return false;
    }

    void emit() {
        for (VertexId x : members_)
            if (!terminal(x) && tree_deg_[x] < 2) return;
        Tree t;
        t.vertices = members_;
        for (int e = 0; e < static_cast<int>(chosen_.size()); ++e)
            if (chosen_[e]) t.edges.push_back(g_.edges()[e]);
        t.normalize();
        out_.trees.push_back(std::move(t));
        if (out_.trees.size() >= limit_) out_.truncated = true;
    }

    void recurse() {
        if (out_.truncated) return;
        if (dead_end()) return;
        if (all_terminals_in()) {
            // anything added now would hang a terminal-free subtree with a non-terminal leaf
            emit();
            return;
        }
        if (!terminals_reachable()) return;
        int e = frontier_edge();
        if (e < 0) return;

        const Edge& edge = g_.edges()[e];
        VertexId fresh = in_tree_[edge.u] ? edge.v : edge.u;
        chosen_[e] = 1;
        in_tree_[fresh] = 1;
        ++tree_deg_[edge.u];
        ++tree_deg_[edge.v];
        members_.push_back(fresh);
        recurse();
        members_.pop_back();
        --tree_deg_[edge.u];
        --tree_deg_[edge.v];
        in_tree_[fresh] = 0;
        chosen_[e] = 0;

        excluded_[e] = 1;
        recurse();
        excluded_[e] = 0;
    }

    const Graph& g_;
    const TerminalSet& s_;
    std::size_t limit_;
    std::vector<char> in_tree_;
    std::vector<int> tree_deg_;
    std::vector<char> excluded_;
    std::vector<char> chosen_;
    std::vector<VertexId> members_;
    SteinerTreeList out_;
};

}  // namespace

SteinerTreeList enumerate_steiner_trees(const Graph& g, const TerminalSet& s, std::size_t limit) {
    if (limit < 1) throw Error("enumeration limit must be at least 1");
    for (VertexId v : s)
        if (!g.valid_vertex(v)) throw Error("terminal out of range");
    return TreeGrower(g, s, limit).run();
}

ReducedTopology classify_topology(const Tree& tree, const TerminalSet& s) {
    // local adjacency over the tree's own vertices
    const auto& vs = tree.vertices;
    auto local = [&](VertexId v) {
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v) throw Error("tree edge endpoint outside its vertex set");
        return static_cast<int>(it - vs.begin());
    };
    const int n = static_cast<int>(vs.size());
    if (n == 0) throw Error("empty tree");
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : tree.edges) {
        int a = local(e.u), b = local(e.v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> is_terminal(n);
    for (int i = 0; i < n; ++i) is_terminal[i] = s.contains(vs[i]);
    for (int i = 0; i < n; ++i)
        if (!is_terminal[i] && adj[i].size() <= 1) throw Error("non-terminal leaf " + std::to_string(vs[i]));

    // suppress non-terminal degree-2 vertices
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) {
        if (is_terminal[v] || adj[v].size() != 2) continue;
        int a = adj[v][0], b = adj[v][1];
        std::replace(adj[a].begin(), adj[a].end(), v, b);
        std::replace(adj[b].begin(), adj[b].end(), v, a);
        adj[v].clear();
        alive[v] = 0;
    }

    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string code(1, is_terminal[v] ? 'T' : 'N');
        if (!kids.empty()) {
            code += '(';
            for (auto& k : kids) code += k;
            code += ')';
        }
        return code;
    };

    std::string best;
    for (int r = 0; r < n; ++r) {
        if (!alive[r]) continue;
        std::string c = encode(r, -1);
        if (best.empty() || c < best) best = std::move(c);
    }
    return {best};
}

std::map<std::string, std::size_t> topology_histogram(const Graph& g, const TerminalSet& s, std::size_t limit) {
    auto list = enumerate_steiner_trees(g, s, limit);
    std::map<std::string, std::size_t> hist;
    for (const Tree& t : list.trees) ++hist[classify_topology(t, s).code];
    return hist;
}

std::size_t count_topologies(const Graph& g, const TerminalSet& s, std::size_t limit) {
    return topology_histogram(g, s, limit).size();
}

}  // namespace gencon
