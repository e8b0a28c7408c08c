#include "gencon/connectors.hpp"

#include <algorithm>
#include <deque>

namespace gencon {

ResourceSpace::ResourceSpace(const Graph& g, const TerminalSet& s)
    : g_(g), s_(s), resource_of_vertex_(g.order(), -1) {
    for (VertexId v = 0; v < g.order(); ++v)
        if (!s.contains(v)) {
            resource_of_vertex_[v] = static_cast<int>(vertex_of_.size());
            vertex_of_.push_back(v);
        }
    for (const Edge& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) edge_of_.push_back(e);

    incident_.assign(s.size(), Bitset(size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        VertexId t = s.members()[i];
        for (VertexId y : g.neighbors(t)) {
            int r = s.contains(y) ? edge_resource(t, y) : vertex_resource(y);
            incident_[i].set(static_cast<std::size_t>(r));
        }
    }
}

Bitset ResourceSpace::full_set() const {
    Bitset b(size());
    for (std::size_t r = 0; r < size(); ++r) b.set(r);
    return b;
}

int ResourceSpace::edge_resource(VertexId a, VertexId b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edge_of_.begin(), edge_of_.end(), e);
    if (it == edge_of_.end() || *it != e) return -1;
    return static_cast<int>(vertex_of_.size() + (it - edge_of_.begin()));
}

// Edge x-y is usable under mask when every resource it needs is in the mask.
bool ResourceSpace::usable(VertexId x, VertexId y, const Bitset& mask) const {
    int rx = resource_of_vertex_[x], ry = resource_of_vertex_[y];
    if (rx < 0 && ry < 0) return mask.test(static_cast<std::size_t>(edge_resource(x, y)));
    if (rx >= 0 && !mask.test(static_cast<std::size_t>(rx))) return false;
    if (ry >= 0 && !mask.test(static_cast<std::size_t>(ry))) return false;
    return true;
}

std::vector<char> ResourceSpace::reach(const Bitset& mask) const {
    std::vector<char> seen(g_.order(), 0);
    std::vector<VertexId> stack{s_.front()};
    seen[s_.front()] = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : g_.neighbors(x))
            if (!seen[y] && usable(x, y, mask)) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return seen;
}

bool ResourceSpace::connects(const Bitset& mask) const {
    auto seen = reach(mask);
    return std::all_of(s_.begin(), s_.end(), [&](VertexId v) { return seen[v]; });
}

bool ResourceSpace::minimal_connector(const Bitset& mask) const {
    if (!connects(mask)) return false;
    bool minimal = true;
    Bitset probe = mask;
    mask.for_each([&](std::size_t r) {
        if (!minimal) return;
        probe.reset(r);
        if (connects(probe)) minimal = false;
        probe.set(r);
    });
    return minimal;
}

Tree ResourceSpace::tree_for(const Bitset& mask) const {
    std::vector<VertexId> parent(g_.order(), -1);
    std::vector<char> seen(g_.order(), 0);
    std::deque<VertexId> queue{s_.front()};
    seen[s_.front()] = 1;
    std::vector<VertexId> order;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (VertexId y : g_.neighbors(x))
            if (!seen[y] && usable(x, y, mask)) {
                seen[y] = 1;
                parent[y] = x;
                queue.push_back(y);
            }
    }
    for (VertexId t : s_)
        if (!seen[t]) throw Error("resource set does not connect the terminals");

    // prune non-terminal leaves, deepest first
    std::vector<int> children(g_.order(), 0);
    for (VertexId v : order)
        if (parent[v] >= 0) ++children[parent[v]];
    std::vector<char> keep(g_.order(), 0);
    for (VertexId v : order) keep[v] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        if (!s_.contains(v) && children[v] == 0) {
            keep[v] = 0;
            if (parent[v] >= 0) --children[parent[v]];
        }
    }
    Tree t;
    for (VertexId v : order)
        if (keep[v]) {
            t.vertices.push_back(v);
            if (parent[v] >= 0) t.edges.emplace_back(parent[v], v);
        }
    t.normalize();
    return t;
}

namespace {

class ConnectorSearch {
public:
    ConnectorSearch(const ResourceSpace& space, std::uint64_t budget)
        : space_(space), g_(space.graph()), budget_(budget) {}

    ConnectorList run() {
        Bitset inc = space_.empty_set(), exc = space_.empty_set();
        recurse(inc, exc);
        return std::move(out_);
    }

private:
    // Lowest undecided resource that would grow the component of the first
    // terminal. Terminal-terminal edges with both ends already inside are
    // never useful and are skipped.
    int frontier(const std::vector<char>& comp, const Bitset& inc, const Bitset& exc) const {
        int best = -1;
        auto consider = [&](int r) {
            if (r < 0) return;
            auto ur = static_cast<std::size_t>(r);
            if (inc.test(ur) || exc.test(ur)) return;
            if (best < 0 || r < best) best = r;
        };
        for (VertexId x = 0; x < g_.order(); ++x) {
            if (!comp[x]) continue;
            for (VertexId y : g_.neighbors(x)) {
                if (comp[y]) continue;
                int ry = space_.vertex_resource(y);
                consider(ry >= 0 ? ry : (space_.vertex_resource(x) < 0 ? space_.edge_resource(x, y) : -1));
            }
        }
        return best;
    }

    void recurse(Bitset& inc, Bitset& exc) {
        if (!out_.complete) return;
        if (++out_.expansions > budget_) {
            out_.complete = false;
            return;
        }
        auto comp = space_.reach(inc);
        const auto& s = space_.terminals();
        if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return comp[v]; })) {
            if (space_.minimal_connector(inc)) out_.sets.push_back(inc);
            return;
        }
        Bitset allowed = space_.full_set();
        allowed.subtract(exc);
        if (!space_.connects(allowed)) return;

        int r = frontier(comp, inc, exc);
        if (r < 0) return;
        auto ur = static_cast<std::size_t>(r);
        inc.set(ur);
        recurse(inc, exc);
        inc.reset(ur);
        exc.set(ur);
        recurse(inc, exc);
        exc.reset(ur);
    }

    const ResourceSpace& space_;
    const Graph& g_;
    std::uint64_t budget_;
    ConnectorList out_;
};

}  // namespace

ConnectorList enumerate_minimal_connectors(const ResourceSpace& space, std::uint64_t budget) {
    return ConnectorSearch(space, budget).run();
}

}  // namespace gencon
