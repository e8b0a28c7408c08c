#include "gencon/reductions.hpp"

#include <algorithm>
#include <charconv>

namespace gencon {

namespace {

struct RoleName {
    RoleKind kind;
    const char* name;
    int arity;
};

constexpr RoleName kRoleNames[] = {
    {RoleKind::hub_u, "hub-u", 0},         {RoleKind::hub_v, "hub-v", 0},
    {RoleKind::hub_w, "hub-w", 0},         {RoleKind::hub_t, "hub-t", 0},
    {RoleKind::element_u, "element-u", 1}, {RoleKind::element_v, "element-v", 1},
    {RoleKind::element_w, "element-w", 1}, {RoleKind::triple, "triple", 1},
    {RoleKind::slack, "slack", 1},         {RoleKind::apex, "apex", 0},
    {RoleKind::var_hat, "var-hat", 1},     {RoleKind::var_pos, "var-pos", 1},
    {RoleKind::var_neg, "var-neg", 1},     {RoleKind::clause, "clause", 1},
    {RoleKind::lift_hub, "lift-hub", 1},   {RoleKind::lift_mid, "lift-mid", 2},
    {RoleKind::pad, "pad", 1},             {RoleKind::original, "original", 1},
};

const RoleName& name_of(RoleKind k) {
    for (const auto& rn : kRoleNames)
        if (rn.kind == k) return rn;
    throw Error("unknown role kind");
}

std::vector<Role> original_roles(int order) {
    std::vector<Role> roles;
    for (int v = 0; v < order; ++v) roles.push_back({RoleKind::original, v});
    return roles;
}

}  // namespace

std::string Role::str() const {
    const auto& rn = name_of(kind);
    std::string out = rn.name;
    if (rn.arity == 1) out += "(" + std::to_string(i) + ")";
    if (rn.arity == 2) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

Role Role::parse(std::string_view text) {
    std::string_view head = text.substr(0, text.find('('));
    for (const auto& rn : kRoleNames) {
        if (head != rn.name) continue;
        Role r{rn.kind};
        if (rn.arity == 0) {
            if (head.size() != text.size()) break;
            return r;
        }
        std::string_view args = text.substr(head.size());
        if (args.size() < 3 || args.front() != '(' || args.back() != ')') break;
        args = args.substr(1, args.size() - 2);
        auto read = [](std::string_view s, int& out) {
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc() && end == s.data() + s.size();
        };
        if (rn.arity == 1 && read(args, r.i)) return r;
        if (rn.arity == 2) {
            auto comma = args.find(',');
            if (comma != std::string_view::npos && read(args.substr(0, comma), r.i) &&
                read(args.substr(comma + 1), r.j))
                return r;
        }
        break;
    }
    throw Error("unknown role \"" + std::string(text) + "\"");
}

VertexId ReducedInstance::find(Role r) const {
    auto it = std::find(roles.begin(), roles.end(), r);
    return it == roles.end() ? -1 : static_cast<VertexId>(it - roles.begin());
}

json reduced_to_json(const ReducedInstance& r) {
    json j;
    j["graph"] = graph_to_json(r.graph);
    j["terminals"] = r.terminals.members();
    j["threshold"] = r.threshold;
    json roles = json::object();
    for (std::size_t v = 0; v < r.roles.size(); ++v) roles[std::to_string(v)] = r.roles[v].str();
    j["roles"] = std::move(roles);
    return j;
}

ReducedInstance reduced_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("terminals"))
        throw Error("reduced instance: expected {\"graph\", \"terminals\", \"threshold\", \"roles\"}");
    ReducedInstance r;
    r.graph = graph_from_json(j["graph"]);
    r.terminals = TerminalSet(r.graph, j["terminals"].get<std::vector<VertexId>>());
    r.threshold = j.value("threshold", 1);
    if (r.threshold < 1) throw Error("reduced instance: threshold must be at least 1");
    r.roles = original_roles(r.graph.order());
    if (j.contains("roles"))
        for (const auto& [key, val] : j["roles"].items()) {
            int v = std::stoi(key);
            if (!r.graph.valid_vertex(v)) throw Error("reduced instance: role for unknown vertex " + key);
            r.roles[v] = Role::parse(val.get<std::string>());
        }
    return r;
}

std::string serialize_reduced(const ReducedInstance& r) { return reduced_to_json(r).dump(); }

Graph labelled_by_roles(const ReducedInstance& r) {
    std::vector<std::string> labels;
    for (const Role& role : r.roles) labels.push_back(role.str());
    return r.graph.with_labels(std::move(labels));
}

// ---------------------------------------------------------------- 3-DM

ReducedInstance reduce_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    const int n = inst.n, m = inst.m();
    if (m < n) throw Error("3-DM reduction needs m >= n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
    const ThreeDMLayout L{n, m};

    std::vector<Role> roles{{RoleKind::hub_u}, {RoleKind::hub_v}, {RoleKind::hub_w}, {RoleKind::hub_t}};
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::element_u, i});
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::element_v, i});
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::element_w, i});
    for (int i = 0; i < m; ++i) roles.push_back({RoleKind::triple, i});
    for (int j = 0; j < m - n; ++j) roles.push_back({RoleKind::slack, j});

    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(L.hub_u(), L.element_u(i));
        e.emplace_back(L.hub_v(), L.element_v(i));
        e.emplace_back(L.hub_w(), L.element_w(i));
    }
    for (int i = 0; i < m; ++i) e.emplace_back(L.hub_t(), L.triple(i));
    for (int j = 0; j < m - n; ++j) {
        e.emplace_back(L.hub_u(), L.slack(j));
        e.emplace_back(L.hub_v(), L.slack(j));
        e.emplace_back(L.hub_w(), L.slack(j));
        for (int i = 0; i < m; ++i) e.emplace_back(L.triple(i), L.slack(j));
    }
    for (int i = 0; i < m; ++i) {
        const auto& t = inst.triples[i];
        e.emplace_back(L.triple(i), L.element_u(t[0]));
        e.emplace_back(L.triple(i), L.element_v(t[1]));
        e.emplace_back(L.triple(i), L.element_w(t[2]));
    }

    ReducedInstance r;
    r.graph = Graph(L.order(), std::move(e));
    r.terminals = TerminalSet(r.graph, {L.hub_u(), L.hub_v(), L.hub_w(), L.hub_t()});
    r.threshold = m;
    r.roles = std::move(roles);
    return r;
}

TreeCertificate matching_to_trees(const ThreeDMInstance& inst, const Matching& mt) {
    inst.validate();
    if (!is_perfect_matching(inst, mt)) throw Error("not a perfect matching of the instance");
    const ThreeDMLayout L{inst.n, inst.m()};
    std::vector<char> matched(inst.triples.size(), 0);
    for (int i : mt.chosen) matched[i] = 1;

    TreeCertificate cert;
    int next_slack = 0;
    for (int i = 0; i < inst.m(); ++i) {
        std::vector<Edge> e;
        if (matched[i]) {
            const auto& t = inst.triples[i];
            e = {{L.hub_u(), L.element_u(t[0])}, {L.hub_v(), L.element_v(t[1])}, {L.hub_w(), L.element_w(t[2])},
                 {L.hub_t(), L.triple(i)},       {L.triple(i), L.element_u(t[0])}, {L.triple(i), L.element_v(t[1])},
                 {L.triple(i), L.element_w(t[2])}};
        } else {
            VertexId a = L.slack(next_slack++);
            e = {{L.hub_u(), a}, {L.hub_v(), a}, {L.hub_w(), a}, {L.hub_t(), L.triple(i)}, {L.triple(i), a}};
        }
        cert.trees.push_back(Tree::from_edges(std::move(e)));
    }
    return cert;
}

Matching trees_to_matching(const ThreeDMInstance& inst, const TreeCertificate& cert) {
    ReducedInstance red = reduce_3dm(inst);
    if (static_cast<int>(cert.size()) != inst.m())
        throw Error("certificate has " + std::to_string(cert.size()) + " trees, expected m=" + std::to_string(inst.m()));
    auto report = verify_certificate(red.graph, red.terminals, cert);
    if (!report.valid) throw Error("invalid certificate: " + report.violations.front());

    Matching mt;
    for (const Tree& t : cert.trees) {
        bool has_slack = false;
        int triple = -1, triples_seen = 0;
        for (VertexId v : t.vertices) {
            const Role& role = red.roles[v];
            if (role.kind == RoleKind::slack) has_slack = true;
            if (role.kind == RoleKind::triple) triple = role.i, ++triples_seen;
        }
        if (has_slack) continue;
        if (triples_seen != 1) throw Error("slack-free tree does not contain exactly one triple vertex");
        mt.chosen.push_back(triple);
    }
    std::sort(mt.chosen.begin(), mt.chosen.end());
    if (!is_perfect_matching(inst, mt)) throw Error("extracted triples do not form a perfect matching");
    return mt;
}

// ---------------------------------------------------------------- 3-SAT

ReducedInstance reduce_3sat(const CnfFormula& phi, bool strict_three) {
    phi.validate(strict_three);
    const int n = phi.num_vars, m = static_cast<int>(phi.clauses.size());
    if (n < 2) throw Error("3-SAT reduction needs at least 2 variables");
    const SatLayout L{n, m};

    std::vector<Role> roles{{RoleKind::apex}};
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::var_hat, i});
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::var_pos, i});
    for (int i = 0; i < n; ++i) roles.push_back({RoleKind::var_neg, i});
    for (int j = 0; j < m; ++j) roles.push_back({RoleKind::clause, j});

    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(L.hat(i), L.pos(i));
        e.emplace_back(L.hat(i), L.neg(i));
    }
    for (int j = 0; j < m; ++j)
        for (const Literal& l : phi.clauses[j]) e.emplace_back(L.literal(l), L.clause(j));
    for (int i = 1; i < n; ++i) {
        e.emplace_back(L.pos(0), L.pos(i));
        e.emplace_back(L.pos(0), L.neg(i));
        e.emplace_back(L.neg(0), L.pos(i));
        e.emplace_back(L.neg(0), L.neg(i));
    }
    for (int i = 0; i < n; ++i) {
        e.emplace_back(L.apex(), L.pos(i));
        e.emplace_back(L.apex(), L.neg(i));
    }
    for (int j = 0; j < m; ++j) e.emplace_back(L.apex(), L.clause(j));

    std::vector<VertexId> terms;
    for (int i = 0; i < n; ++i) terms.push_back(L.hat(i));
    for (int j = 0; j < m; ++j) terms.push_back(L.clause(j));

    ReducedInstance r;
    r.graph = Graph(L.order(), std::move(e));
    r.terminals = TerminalSet(r.graph, std::move(terms));
    r.threshold = 2;
    r.roles = std::move(roles);
    return r;
}

TreeCertificate assignment_to_trees(const CnfFormula& phi, const Assignment& t) {
    phi.validate();
    if (phi.num_vars < 2) throw Error("3-SAT reduction needs at least 2 variables");
    if (!satisfies(phi, t)) throw Error("assignment does not satisfy the formula");
    const int n = phi.num_vars, m = static_cast<int>(phi.clauses.size());
    const SatLayout L{n, m};
    auto chosen = [&](int i) { return t.values[i] ? L.pos(i) : L.neg(i); };
    auto other = [&](int i) { return t.values[i] ? L.neg(i) : L.pos(i); };

    std::vector<Edge> first, second;
    for (int j = 0; j < m; ++j) {
        // lowest-variable true literal; a clause never holds a variable twice
        const Literal* pick = nullptr;
        for (const Literal& l : phi.clauses[j])
            if (t.values[l.var] == l.positive && (!pick || l.var < pick->var)) pick = &l;
        first.emplace_back(L.clause(j), L.literal(*pick));
    }
    for (int i = 1; i < n; ++i) first.emplace_back(chosen(0), chosen(i));
    for (int i = 0; i < n; ++i) first.emplace_back(L.hat(i), chosen(i));

    for (int j = 0; j < m; ++j) second.emplace_back(L.apex(), L.clause(j));
    for (int i = 0; i < n; ++i) {
        second.emplace_back(L.apex(), other(i));
        second.emplace_back(other(i), L.hat(i));
    }
    TreeCertificate cert;
    cert.trees.push_back(Tree::from_edges(std::move(first)));
    cert.trees.push_back(Tree::from_edges(std::move(second)));
    return cert;
}

Assignment trees_to_assignment(const CnfFormula& phi, const TreeCertificate& cert) {
    ReducedInstance red = reduce_3sat(phi);
    if (cert.size() != 2) throw Error("expected a 2-tree certificate");
    auto report = verify_certificate(red.graph, red.terminals, cert);
    if (!report.valid) throw Error("invalid certificate: " + report.violations.front());

    const SatLayout L{phi.num_vars, static_cast<int>(phi.clauses.size())};
    auto holds = [](const Tree& t, VertexId v) { return std::binary_search(t.vertices.begin(), t.vertices.end(), v); };
    const Tree* apex_free = nullptr;
    for (const Tree& t : cert.trees)
        if (!holds(t, L.apex())) {
            apex_free = &t;
            break;
        }
    if (!apex_free) throw Error("invalid certificate: both trees contain the apex");

    Assignment a;
    a.values.resize(static_cast<std::size_t>(phi.num_vars));
    for (int i = 0; i < phi.num_vars; ++i) a.values[i] = holds(*apex_free, L.pos(i));
    if (!satisfies(phi, a)) throw Error("extracted assignment does not satisfy the formula");
    return a;
}

// ---------------------------------------------------------------- lifting and padding

ReducedInstance lift_terminals(const Graph& g, const TerminalSet& s, int k1, int k2) {
    if (k1 <= static_cast<int>(s.size())) throw Error("lift: k1 must exceed |S|");
    if (k2 < 1) throw Error("lift: k2 must be at least 1");
    const int base = g.order();
    const int hubs = k1 - static_cast<int>(s.size());
    const VertexId anchor = s.front();
    auto hub = [&](int i) { return base + i; };
    auto mid = [&](int i, int j) { return base + hubs + i * k2 + j; };

    ReducedInstance r;
    r.roles = original_roles(base);
    for (int i = 0; i < hubs; ++i) r.roles.push_back({RoleKind::lift_hub, i});
    for (int i = 0; i < hubs; ++i)
        for (int j = 0; j < k2; ++j) r.roles.push_back({RoleKind::lift_mid, i, j});

    std::vector<Edge> e = g.edges();
    for (int i = 0; i < hubs; ++i)
        for (int j = 0; j < k2; ++j) {
            e.emplace_back(hub(i), mid(i, j));
            e.emplace_back(mid(i, j), anchor);
        }
    r.graph = Graph(base + hubs + hubs * k2, std::move(e));
    std::vector<VertexId> terms = s.members();
    for (int i = 0; i < hubs; ++i) terms.push_back(hub(i));
    r.terminals = TerminalSet(r.graph, std::move(terms));
    r.threshold = k2;
    return r;
}

ReducedInstance pad_tree_count(const Graph& g, const TerminalSet& s, int k) {
    if (k < 3) throw Error("pad: k must be at least 3");
    const int base = g.order();
    ReducedInstance r;
    r.roles = original_roles(base);
    std::vector<Edge> e = g.edges();
    for (int i = 0; i < k - 2; ++i) {
        r.roles.push_back({RoleKind::pad, i});
        for (VertexId t : s) e.emplace_back(base + i, t);
    }
    r.graph = Graph(base + k - 2, std::move(e));
    r.terminals = TerminalSet(r.graph, s.members());
    r.threshold = k;
    return r;
}

}  // namespace gencon
