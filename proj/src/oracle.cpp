#include "gencon/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace gencon {

namespace {

void check_cap(const Graph& g, const TerminalSet& s, int cap) {
    if (g.order() > cap) throw Error("brute-force oracle: order " + std::to_string(g.order()) + " exceeds cap " +
                                     std::to_string(cap));
    if (cap > 11) throw Error("brute-force oracle: cap above 11 is not supported");
    for (VertexId v : s)
        if (!g.valid_vertex(v)) throw Error("terminal out of range");
}

std::vector<VertexId> non_terminals(const Graph& g, const TerminalSet& s) {
    std::vector<VertexId> nt;
    for (VertexId v = 0; v < g.order(); ++v)
        if (!s.contains(v)) nt.push_back(v);
    return nt;
}

// Spanning trees of G[U] with all leaves in S, for U = S + chosen non-terminals.
std::vector<Tree> trees_for_mask(const Graph& g, const TerminalSet& s, const std::vector<VertexId>& nt,
                                 std::uint32_t mask) {
    std::vector<char> in_u(g.order(), 0);
    int u_size = 0;
    for (VertexId t : s) in_u[t] = 1, ++u_size;
    for (std::size_t i = 0; i < nt.size(); ++i)
        if (mask >> i & 1u) in_u[nt[i]] = 1, ++u_size;

    std::vector<Edge> local;
    for (const Edge& e : g.edges())
        if (in_u[e.u] && in_u[e.v]) local.push_back(e);
    const int need = u_size - 1;
    std::vector<Tree> out;
    if (static_cast<int>(local.size()) < need) return out;

    using Labels = std::array<std::int8_t, 16>;
    Labels labels{};
    for (int v = 0; v < g.order(); ++v) labels[v] = static_cast<std::int8_t>(v);
    std::vector<int> picked;

    auto finish = [&]() {
        std::array<int, 16> deg{};
        for (int i : picked) ++deg[local[i].u], ++deg[local[i].v];
        for (VertexId v = 0; v < g.order(); ++v)
            if (in_u[v] && !s.contains(v) && deg[v] < 2) return;
        Tree t;
        for (VertexId v = 0; v < g.order(); ++v)
            if (in_u[v]) t.vertices.push_back(v);
        for (int i : picked) t.edges.push_back(local[i]);
        out.push_back(std::move(t));
    };

    // choose `need` acyclic edges in index order; acyclic + |U|-1 edges = spanning tree
    auto rec = [&](auto&& self, int from, const Labels& lab) -> void {
        if (static_cast<int>(picked.size()) == need) {
            finish();
            return;
        }
        const int remaining = need - static_cast<int>(picked.size());
        for (int i = from; i + remaining <= static_cast<int>(local.size()); ++i) {
            const Edge& e = local[i];
            std::int8_t a = lab[e.u], b = lab[e.v];
            if (a == b) continue;
            Labels next = lab;
            for (auto& x : next)
                if (x == b) x = a;
            picked.push_back(i);
            self(self, i + 1, next);
            picked.pop_back();
        }
    };
    if (need == 0) {
        finish();
    } else {
        rec(rec, 0, labels);
    }
    return out;
}

}  // namespace

std::vector<Tree> oracle_steiner_trees_serial(const Graph& g, const TerminalSet& s, int cap) {
    check_cap(g, s, cap);
    auto nt = non_terminals(g, s);
    std::vector<Tree> all;
    for (std::uint32_t mask = 0; mask < (1u << nt.size()); ++mask) {
        auto part = trees_for_mask(g, s, nt, mask);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Tree> oracle_steiner_trees(const Graph& g, const TerminalSet& s, int cap) {
    check_cap(g, s, cap);
    auto nt = non_terminals(g, s);
    const auto masks = static_cast<std::int64_t>(1) << nt.size();
    std::vector<std::vector<Tree>> parts(static_cast<std::size_t>(masks));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t m = 0; m < masks; ++m) parts[m] = trees_for_mask(g, s, nt, static_cast<std::uint32_t>(m));
    std::vector<Tree> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    return all;
}

int brute_force_kappa(const Graph& g, const TerminalSet& s, int cap) {
    auto trees = oracle_steiner_trees(g, s, cap);
    struct Footprint {
        std::uint32_t inner;  // non-terminal vertices
        std::uint64_t edges;  // edge indices
    };
    std::vector<Footprint> fp;
    for (const Tree& t : trees) {
        Footprint f{0, 0};
        for (VertexId v : t.vertices)
            if (!s.contains(v)) f.inner |= 1u << v;
        for (const Edge& e : t.edges) f.edges |= std::uint64_t{1} << g.edge_index(e.u, e.v);
        fp.push_back(f);
    }

    // Every packing either puts edge e in exactly one tree or leaves it out,
    // so branching on one edge at a time covers all packings.
    std::vector<std::vector<int>> by_edge(g.edge_count());
    for (int i = 0; i < static_cast<int>(fp.size()); ++i)
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            if (fp[i].edges >> e & 1) by_edge[e].push_back(i);
    std::vector<std::uint64_t> at_terminal;
    for (VertexId t : s) {
        std::uint64_t m = 0;
        for (VertexId w : g.neighbors(t)) m |= std::uint64_t{1} << g.edge_index(t, w);
        at_terminal.push_back(m);
    }

    int best = 0;
    auto rec = [&](auto&& self, int count, std::uint32_t inner, std::uint64_t blocked) -> void {
        best = std::max(best, count);
        int room = 1 << 30;
        std::uint64_t pick = 0;
        for (std::uint64_t m : at_terminal) {
            int avail = std::popcount(m & ~blocked);
            if (avail < room) room = avail, pick = m & ~blocked;
        }
        if (count + room <= best) return;
        const int e = std::countr_zero(pick);
        for (int i : by_edge[e]) {
            if ((fp[i].inner & inner) || (fp[i].edges & blocked)) continue;
            self(self, count + 1, inner | fp[i].inner, blocked | fp[i].edges);
        }
        self(self, count, inner, blocked | std::uint64_t{1} << e);
    };
    rec(rec, 0, 0, 0);
    return best;
}

}  // namespace gencon
