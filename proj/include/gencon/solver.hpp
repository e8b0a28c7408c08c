#pragma once

#include <cstdint>
#include <vector>

#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"

namespace gencon {

/// Search budget, counted in node expansions (connector enumeration plus
/// packing search). Node counts are machine independent.
struct Budget {
    std::uint64_t expansions = 50'000'000;
};

enum class SolveStatus { exact, lower_bound };

struct SolveResult {
    int value = 0;                 // kappa(S) when exact, else best found
    int upper_bound = 0;           // equals value when exact
    SolveStatus status = SolveStatus::exact;
    TreeCertificate certificate;   // value trees, canonical order
    std::uint64_t expansions = 0;
};

/// Computes kappa(S), the maximum number of internally disjoint trees
/// connecting S, by exact branch and bound over minimal connectors.
SolveResult kappa_set_exact(const Graph& g, const TerminalSet& s, Budget budget = {});

enum class Decision { certificate, refuted, unknown };

struct DecideResult {
    Decision decision = Decision::unknown;
    TreeCertificate certificate;   // exactly k trees when decision == certificate
    std::uint64_t expansions = 0;
};

/// Decides kappa(S) >= k. k = 1 asks for any Steiner tree.
DecideResult decide_kappa_at_least(const Graph& g, const TerminalSet& s, int k, Budget budget = {});

/// min over v in S of deg(v); an upper bound on kappa(S).
int degree_bound(const Graph& g, const TerminalSet& s);

struct KappaKResult {
    int value = 0;                    // kappa_k(G) when exact, else an upper bound
    std::vector<VertexId> subset;     // a k-subset attaining value (first in lex order)
    bool exact = true;
    std::uint64_t expansions = 0;
};

/// kappa_k(G) = min over k-subsets S of kappa(S). `budget` applies per subset.
/// Subsets are solved in parallel when OpenMP is available; the result is
/// identical to kappa_k_graph_serial.
KappaKResult kappa_k_graph(const Graph& g, int k, Budget budget = {});
KappaKResult kappa_k_graph_serial(const Graph& g, int k, Budget budget = {});

/// Number of k-subsets of an n-set; throws when it exceeds the sweep cap.
std::uint64_t subset_count(int n, int k);

/// The idx-th k-subset of {0..n-1} in lexicographic order.
std::vector<VertexId> unrank_subset(int n, int k, std::uint64_t idx);

}  // namespace gencon
