#include "gencon/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace gencon {

Tree Tree::from_edges(std::vector<Edge> edges) {
    Tree t;
    t.edges = std::move(edges);
    for (const Edge& e : t.edges) {
        t.vertices.push_back(e.u);
        t.vertices.push_back(e.v);
    }
    t.normalize();
    return t;
}

void Tree::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
}

void TreeCertificate::canonicalize() {
    for (auto& t : trees) t.normalize();
    std::sort(trees.begin(), trees.end());
}

namespace {

std::string edge_str(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

// Returns an empty string when t is a tree of g containing s, else the reason.
std::string check_tree(const Graph& g, const TerminalSet& s, const Tree& t) {
    for (VertexId v : t.vertices)
        if (!g.valid_vertex(v)) return "vertex " + std::to_string(v) + " is not in the graph";
    auto vs = t.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return "repeated vertex";
    auto es = t.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return "repeated edge";

    for (const Edge& e : es) {
        if (!g.has_edge(e.u, e.v)) return "edge " + edge_str(e) + " is not in the graph";
        if (!std::binary_search(vs.begin(), vs.end(), e.u) || !std::binary_search(vs.begin(), vs.end(), e.v))
            return "edge " + edge_str(e) + " has an endpoint outside the vertex set";
    }
    for (VertexId v : s)
        if (!std::binary_search(vs.begin(), vs.end(), v)) return "terminal " + std::to_string(v) + " missing";
    if (es.size() + 1 != vs.size()) return "edge count is not vertex count - 1";

    // union-find over local indices; a cycle or a second component fails
    std::vector<int> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto local = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Edge& e : es) {
        int a = find(local(e.u)), b = find(local(e.v));
        if (a == b) return "contains a cycle";
        parent[a] = b;
    }
    return {};
}

}  // namespace

VerifyReport verify_certificate(const Graph& g, const TerminalSet& s, const TreeCertificate& cert) {
    VerifyReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.violations.push_back(std::move(msg));
    };

    for (std::size_t i = 0; i < cert.trees.size(); ++i)
        if (auto why = check_tree(g, s, cert.trees[i]); !why.empty())
            fail("tree " + std::to_string(i) + ": " + why);

    // edge owner and non-terminal vertex owner across trees
    std::vector<int> edge_owner(g.edge_count(), -1);
    std::vector<int> vertex_owner(g.order(), -1);
    for (std::size_t i = 0; i < cert.trees.size(); ++i) {
        const Tree& t = cert.trees[i];
        for (const Edge& e : t.edges) {
            int idx = g.edge_index(e.u, e.v);
            if (idx < 0) continue;
            if (edge_owner[idx] >= 0 && edge_owner[idx] != static_cast<int>(i))
                fail("trees " + std::to_string(edge_owner[idx]) + " and " + std::to_string(i) + " share edge " +
                     edge_str(e));
            else
                edge_owner[idx] = static_cast<int>(i);
        }
        for (VertexId v : t.vertices) {
            if (!g.valid_vertex(v) || s.contains(v)) continue;
            if (vertex_owner[v] >= 0 && vertex_owner[v] != static_cast<int>(i))
                fail("trees " + std::to_string(vertex_owner[v]) + " and " + std::to_string(i) +
                     " share non-terminal vertex " + std::to_string(v));
            else
                vertex_owner[v] = static_cast<int>(i);
        }
    }
    return report;
}

}  // namespace gencon
