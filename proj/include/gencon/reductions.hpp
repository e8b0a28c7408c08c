#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gencon/certificate.hpp"
#include "gencon/graph.hpp"
#include "gencon/graph_io.hpp"

namespace gencon {

// ---------------------------------------------------------------- 3-DM

/// Three sets U, V, W of size n and m distinct triples (u, v, w), 0-based.
struct ThreeDMInstance {
    int n = 0;
    std::vector<std::array<int, 3>> triples;

    int m() const { return static_cast<int>(triples.size()); }
    /// Index range and distinctness; does not require m >= n.
    void validate() const;
};

/// Indices into ThreeDMInstance::triples, sorted.
struct Matching {
    std::vector<int> chosen;
    friend bool operator==(const Matching&, const Matching&) = default;
};

/// |chosen| = n and the chosen triples are disjoint in every coordinate.
bool is_perfect_matching(const ThreeDMInstance& inst, const Matching& m);

ThreeDMInstance parse_3dm(std::string_view json_text);
json threedm_to_json(const ThreeDMInstance& inst);

/// Exhaustive search over n-subsets of triples (n <= 6, m <= 20).
/// Returns the lexicographically first perfect matching.
std::optional<Matching> solve_3dm_brute(const ThreeDMInstance& inst);

// ---------------------------------------------------------------- CNF

struct Literal {
    int var = 0;           // 0-based
    bool positive = true;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<Literal>> clauses;

    /// Variable range and no repeated/complementary variable in a clause.
    /// With strict_three, every clause must have exactly three literals.
    void validate(bool strict_three = false) const;
};

struct Assignment {
    std::vector<bool> values;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

bool satisfies(const CnfFormula& phi, const Assignment& t);

CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& phi);

/// Exhaustive search in binary counting order (variable 0 least significant),
/// so the all-false assignment is tried first. num_vars <= 20.
std::optional<Assignment> solve_sat_brute(const CnfFormula& phi);

// ---------------------------------------------------------------- reduced instances

enum class RoleKind {
    hub_u, hub_v, hub_w, hub_t,
    element_u, element_v, element_w, triple, slack,
    apex, var_hat, var_pos, var_neg, clause,
    lift_hub, lift_mid, pad, original,
};

/// What a vertex of a constructed graph stands for, e.g. triple(3).
struct Role {
    RoleKind kind = RoleKind::original;
    int i = -1;
    int j = -1;

    std::string str() const;
    static Role parse(std::string_view text);
    friend bool operator==(const Role&, const Role&) = default;
};

/// Graph, terminal set, decision threshold k and a role per vertex.
struct ReducedInstance {
    Graph graph;
    TerminalSet terminals;
    int threshold = 1;
    std::vector<Role> roles;

    /// The vertex with the given role, or -1.
    VertexId find(Role r) const;
};

json reduced_to_json(const ReducedInstance& r);
ReducedInstance reduced_from_json(const json& j);
std::string serialize_reduced(const ReducedInstance& r);
/// Graph copy labelled with role names, for DOT output.
Graph labelled_by_roles(const ReducedInstance& r);

/// Vertex ids of the 3-DM construction: hubs u,v,w,t = 0..3, then the
/// u-, v-, w-element blocks (n each), triple vertices (m), slack vertices (m-n).
struct ThreeDMLayout {
    int n = 0;
    int m = 0;
    static constexpr VertexId hub_u() { return 0; }
    static constexpr VertexId hub_v() { return 1; }
    static constexpr VertexId hub_w() { return 2; }
    static constexpr VertexId hub_t() { return 3; }
    VertexId element_u(int i) const { return 4 + i; }
    VertexId element_v(int i) const { return 4 + n + i; }
    VertexId element_w(int i) const { return 4 + 2 * n + i; }
    VertexId triple(int i) const { return 4 + 3 * n + i; }
    VertexId slack(int j) const { return 4 + 3 * n + m + j; }
    int order() const { return 4 + 2 * n + 2 * m; }
};

/// Vertex ids of the 3-SAT construction: apex = 0, then hat vertices (n),
/// positive literals (n), negative literals (n), clauses (m).
struct SatLayout {
    int n = 0;
    int m = 0;
    static constexpr VertexId apex() { return 0; }
    VertexId hat(int i) const { return 1 + i; }
    VertexId pos(int i) const { return 1 + n + i; }
    VertexId neg(int i) const { return 1 + 2 * n + i; }
    VertexId literal(Literal l) const { return l.positive ? pos(l.var) : neg(l.var); }
    VertexId clause(int j) const { return 1 + 3 * n + j; }
    int order() const { return 3 * n + m + 1; }
};

/// 3-DM -> "kappa(S) >= m" with S the four hubs. Requires m >= n.
ReducedInstance reduce_3dm(const ThreeDMInstance& inst);
/// m trees from a perfect matching: matched triples give 8-vertex trees,
/// unmatched triples take slack vertices in increasing order.
TreeCertificate matching_to_trees(const ThreeDMInstance& inst, const Matching& m);
/// Reads the matching off a valid m-tree certificate of reduce_3dm(inst).
Matching trees_to_matching(const ThreeDMInstance& inst, const TreeCertificate& cert);

/// CNF -> "kappa(S) >= 2" with S = hat vertices + clause vertices. Requires n >= 2.
ReducedInstance reduce_3sat(const CnfFormula& phi, bool strict_three = false);
/// Two trees from a satisfying assignment.
TreeCertificate assignment_to_trees(const CnfFormula& phi, const Assignment& t);
/// Reads a satisfying assignment off a valid 2-tree certificate of reduce_3sat(phi).
Assignment trees_to_assignment(const CnfFormula& phi, const TreeCertificate& cert);

/// Grows S to k1 terminals: each new hub joins the least terminal through k2
/// private length-two paths. kappa(S') >= k2 iff kappa(S) >= k2.
ReducedInstance lift_terminals(const Graph& g, const TerminalSet& s, int k1, int k2);
/// Adds k-2 vertices adjacent to all of S. kappa'(S) >= k iff kappa(S) >= 2.
ReducedInstance pad_tree_count(const Graph& g, const TerminalSet& s, int k);

}  // namespace gencon
