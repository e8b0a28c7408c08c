#include "gencon/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gencon {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error("Rng::below(0)");
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
        std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

Graph random_graph(int order, double p, Rng& rng, bool require_connected, int attempts) {
    if (order < 1) throw Error("random graph: order must be positive");
    if (p < 0.0 || p > 1.0) throw Error("random graph: probability must be in [0,1]");
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<Edge> e;
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (rng.chance(p)) e.emplace_back(a, b);
        Graph g(order, std::move(e));
        if (!require_connected || components(g).size() == 1) return g;
    }
    throw Error("random graph: no connected sample after " + std::to_string(attempts) + " attempts");
}

ThreeDMInstance random_3dm(int n, int m, Rng& rng) {
    if (n < 1 || m < 0) throw Error("random 3-DM: need n >= 1 and m >= 0");
    const long long space = static_cast<long long>(n) * n * n;
    if (m > space)
        throw Error("random 3-DM: only " + std::to_string(space) + " distinct triples exist, asked for " +
                    std::to_string(m));
    ThreeDMInstance inst;
    inst.n = n;
    std::set<std::array<int, 3>> seen;
    while (static_cast<int>(inst.triples.size()) < m) {
        std::array<int, 3> t{static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)),
                             static_cast<int>(rng.below(n))};
        if (seen.insert(t).second) inst.triples.push_back(t);
    }
    return inst;
}

CnfFormula random_cnf(int vars, int clauses, Rng& rng, int width) {
    if (vars < 1 || clauses < 0 || width < 1) throw Error("random CNF: need vars >= 1, clauses >= 0, width >= 1");
    CnfFormula phi;
    phi.num_vars = vars;
    const int w = std::min(width, vars);
    std::vector<int> pool(vars);
    for (int c = 0; c < clauses; ++c) {
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<Literal> clause;
        for (int k = 0; k < w; ++k) {
            auto pick = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(vars - k)));
            std::swap(pool[k], pool[pick]);
            clause.push_back({pool[k], rng.chance(0.5)});
        }
        std::sort(clause.begin(), clause.end());
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

CnfFormula full_sign_pattern_formula() {
    CnfFormula phi;
    phi.num_vars = 3;
    for (int bits = 0; bits < 8; ++bits)
        phi.clauses.push_back({{0, (bits & 1) != 0}, {1, (bits & 2) != 0}, {2, (bits & 4) != 0}});
    return phi;
}

TerminalSet random_terminals(const Graph& g, int size, Rng& rng) {
    if (size < 2 || size > g.order()) throw Error("random terminals: size out of range");
    std::vector<VertexId> pool(g.order());
    std::iota(pool.begin(), pool.end(), 0);
    for (int k = 0; k < size; ++k) {
        auto pick = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.order() - k)));
        std::swap(pool[k], pool[pick]);
    }
    pool.resize(size);
    return TerminalSet(g, std::move(pool));
}

}  // namespace gencon
