#pragma once

#include <cstdint>
#include <random>

#include "gencon/graph.hpp"
#include "gencon/reductions.hpp"

namespace gencon {

/// The one source of randomness. Bounded draws use rejection sampling on the
/// raw 64-bit stream, so output is identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Erdos-Renyi G(order, p). With require_connected, redraws until connected
/// and throws after `attempts` failures.
Graph random_graph(int order, double p, Rng& rng, bool require_connected = true, int attempts = 1000);

/// m distinct triples over n-element sets; throws when m > n^3.
ThreeDMInstance random_3dm(int n, int m, Rng& rng);

/// Clauses of min(width, vars) distinct variables with random signs.
CnfFormula random_cnf(int vars, int clauses, Rng& rng, int width = 3);

/// The 8 clauses over three variables with every sign pattern (unsatisfiable).
CnfFormula full_sign_pattern_formula();

/// Uniformly random terminal set of the given size.
TerminalSet random_terminals(const Graph& g, int size, Rng& rng);

}  // namespace gencon
