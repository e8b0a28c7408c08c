#include "gencon/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gencon/connectors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gencon {

int degree_bound(const Graph& g, const TerminalSet& s) {
    int best = std::numeric_limits<int>::max();
    for (VertexId v : s) best = std::min(best, g.degree(v));
    return best;
}

namespace {

// Maximum set packing over minimal connectors.
//
// Branching: take the terminal with the fewest live incident resources and,
// among those, the resource r shared by the fewest candidates. Either one of
// the candidates containing r is in the packing, or r stays unused. Every
// packing follows exactly one branch path.
//
// Bound: each tree owns at least one incident resource at every terminal, so
// the live resources at any terminal cap how many more trees fit.
class PackingSearch {
public:
    PackingSearch(const ResourceSpace& space, std::vector<Bitset> candidates, std::uint64_t budget,
                  std::uint64_t used)
        : space_(space), cands_(std::move(candidates)), budget_(budget), expansions_(used) {}

    // Packs greedily in candidate order; used as the starting incumbent.
    std::vector<int> greedy() const {
        std::vector<int> chosen;
        Bitset used = space_.empty_set();
        for (int i = 0; i < static_cast<int>(cands_.size()); ++i)
            if (!cands_[i].intersects(used)) {
                chosen.push_back(i);
                used |= cands_[i];
            }
        return chosen;
    }

    // floor: only packings larger than this are interesting.
    // goal: stop as soon as a packing of this size is found.
    void run(std::vector<int> incumbent, int floor, int goal) {
        best_ = std::move(incumbent);
        floor_ = floor;
        goal_ = goal;
        if (static_cast<int>(best_.size()) >= goal_) return;
        std::vector<int> all(cands_.size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> chosen;
        recurse(all, chosen);
    }

    int upper_bound_all() const {
        Bitset live = space_.empty_set();
        for (const auto& c : cands_) live |= c;
        return bound(live);
    }

    const std::vector<int>& best() const { return best_; }
    bool aborted() const { return aborted_; }
    std::uint64_t expansions() const { return expansions_; }
    const std::vector<Bitset>& candidates() const { return cands_; }

private:
    int bound(const Bitset& live) const {
        int b = std::numeric_limits<int>::max();
        for (std::size_t t = 0; t < space_.terminals().size(); ++t)
            b = std::min(b, static_cast<int>((space_.incident(t) & live).count()));
        return b;
    }

    void recurse(const std::vector<int>& live_cands, std::vector<int>& chosen) {
        if (stop_ || aborted_) return;
        if (++expansions_ > budget_) {
            aborted_ = true;
            return;
        }
        if (chosen.size() > best_.size()) {
            best_ = chosen;
            if (static_cast<int>(best_.size()) >= goal_) {
                stop_ = true;
                return;
            }
        }
        if (live_cands.empty()) return;

        Bitset live = space_.empty_set();
        for (int c : live_cands) live |= cands_[c];
        const int floor = std::max(floor_, static_cast<int>(best_.size()));

        int tightest = -1, tight_count = std::numeric_limits<int>::max();
        for (std::size_t t = 0; t < space_.terminals().size(); ++t) {
            int cnt = static_cast<int>((space_.incident(t) & live).count());
            if (cnt < tight_count) {
                tight_count = cnt;
                tightest = static_cast<int>(t);
            }
        }
        if (static_cast<int>(chosen.size()) + tight_count <= floor) return;

        std::size_t pivot = 0;
        int pivot_uses = std::numeric_limits<int>::max();
        (space_.incident(static_cast<std::size_t>(tightest)) & live).for_each([&](std::size_t r) {
            int uses = 0;
            for (int c : live_cands)
                if (cands_[c].test(r)) ++uses;
            if (uses < pivot_uses) {
                pivot_uses = uses;
                pivot = r;
            }
        });

        std::vector<int> rest;
        for (int c : live_cands) {
            if (!cands_[c].test(pivot)) {
                rest.push_back(c);
                continue;
            }
            std::vector<int> next;
            for (int d : live_cands)
                if (d != c && !cands_[d].intersects(cands_[c])) next.push_back(d);
            chosen.push_back(c);
            recurse(next, chosen);
            chosen.pop_back();
            if (stop_ || aborted_) return;
        }
        recurse(rest, chosen);
    }

    const ResourceSpace& space_;
    std::vector<Bitset> cands_;
    std::uint64_t budget_;
    std::uint64_t expansions_;
    std::vector<int> best_;
    int floor_ = 0;
    int goal_ = 0;
    bool stop_ = false;
    bool aborted_ = false;
};

struct Prepared {
    std::vector<Bitset> sets;
    std::vector<Tree> trees;
    bool complete = true;
    std::uint64_t expansions = 0;
};

// Minimal connectors sorted by their canonical tree (edge count, edge list).
Prepared prepare(const ResourceSpace& space, std::uint64_t budget) {
    auto list = enumerate_minimal_connectors(space, budget);
    std::vector<Tree> trees;
    trees.reserve(list.sets.size());
    for (const auto& m : list.sets) trees.push_back(space.tree_for(m));
    std::vector<std::size_t> order(list.sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (trees[a] != trees[b]) return trees[a] < trees[b];
        return list.sets[a] < list.sets[b];
    });
    Prepared p;
    p.complete = list.complete;
    p.expansions = list.expansions;
    for (std::size_t i : order) {
        p.sets.push_back(std::move(list.sets[i]));
        p.trees.push_back(std::move(trees[i]));
    }
    return p;
}

TreeCertificate certificate_of(const Prepared& p, const std::vector<int>& chosen, std::size_t count) {
    TreeCertificate cert;
    for (std::size_t i = 0; i < chosen.size() && i < count; ++i) cert.trees.push_back(p.trees[chosen[i]]);
    cert.canonicalize();
    return cert;
}

}  // namespace

SolveResult kappa_set_exact(const Graph& g, const TerminalSet& s, Budget budget) {
    SolveResult res;
    if (!terminals_connected(g, s)) return res;  // includes isolated terminals

    const int deg_ub = degree_bound(g, s);
    ResourceSpace space(g, s);
    Prepared prep = prepare(space, budget.expansions);
    PackingSearch search(space, prep.sets, budget.expansions, prep.expansions);
    std::vector<int> incumbent = search.greedy();

    if (!prep.complete) {
        res.value = static_cast<int>(incumbent.size());
        res.upper_bound = deg_ub;
        res.status = res.value == deg_ub ? SolveStatus::exact : SolveStatus::lower_bound;
        res.certificate = certificate_of(prep, incumbent, incumbent.size());
        res.expansions = prep.expansions;
        return res;
    }

    const int goal = std::min(deg_ub, search.upper_bound_all());
    search.run(std::move(incumbent), 0, goal);
    const auto& best = search.best();
    res.value = static_cast<int>(best.size());
    res.certificate = certificate_of(prep, best, best.size());
    res.expansions = search.expansions();
    if (search.aborted() && res.value < goal) {
        res.status = SolveStatus::lower_bound;
        res.upper_bound = goal;
    } else {
        res.status = SolveStatus::exact;
        res.upper_bound = res.value;
    }
    return res;
}

DecideResult decide_kappa_at_least(const Graph& g, const TerminalSet& s, int k, Budget budget) {
    if (k < 1) throw Error("threshold k must be at least 1");
    DecideResult res;
    if (!terminals_connected(g, s) || degree_bound(g, s) < k) {
        res.decision = Decision::refuted;
        return res;
    }
    ResourceSpace space(g, s);
    Prepared prep = prepare(space, budget.expansions);
    PackingSearch search(space, prep.sets, budget.expansions, prep.expansions);
    std::vector<int> incumbent = search.greedy();
    res.expansions = prep.expansions;

    if (static_cast<int>(incumbent.size()) >= k) {
        res.decision = Decision::certificate;
        res.certificate = certificate_of(prep, incumbent, static_cast<std::size_t>(k));
        return res;
    }
    if (!prep.complete) {
        res.decision = Decision::unknown;
        return res;
    }
    if (search.upper_bound_all() < k) {
        res.decision = Decision::refuted;
        return res;
    }
    search.run(std::move(incumbent), k - 1, k);
    res.expansions = search.expansions();
    if (static_cast<int>(search.best().size()) >= k) {
        res.decision = Decision::certificate;
        res.certificate = certificate_of(prep, search.best(), static_cast<std::size_t>(k));
    } else {
        res.decision = search.aborted() ? Decision::unknown : Decision::refuted;
    }
    return res;
}

std::uint64_t subset_count(int n, int k) {
    constexpr std::uint64_t cap = 100'000'000;
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (c > cap) throw Error("too many subsets to sweep (> 1e8)");
    }
    return c;
}

std::vector<VertexId> unrank_subset(int n, int k, std::uint64_t idx) {
    std::vector<VertexId> out;
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next; v < n; ++v) {
            std::uint64_t with_v = subset_count(n - v - 1, k - slot - 1);
            if (idx < with_v) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            idx -= with_v;
        }
    }
    return out;
}

namespace {

struct SubsetOutcome {
    int lower = 0;
    int upper = 0;
    std::uint64_t expansions = 0;
};

SubsetOutcome solve_subset(const Graph& g, const std::vector<VertexId>& subset, Budget budget) {
    SolveResult r = kappa_set_exact(g, TerminalSet(g, subset), budget);
    return {r.value, r.upper_bound, r.expansions};
}

KappaKResult reduce_outcomes(const Graph& g, int k, const std::vector<SubsetOutcome>& outcomes) {
    KappaKResult res;
    int min_lower = std::numeric_limits<int>::max();
    int min_upper = std::numeric_limits<int>::max();
    std::uint64_t argmin = 0;
    for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
        min_lower = std::min(min_lower, outcomes[i].lower);
        if (outcomes[i].upper < min_upper) {
            min_upper = outcomes[i].upper;
            argmin = i;
        }
        res.expansions += outcomes[i].expansions;
    }
    res.value = min_upper;
    res.exact = min_lower == min_upper;
    res.subset = unrank_subset(g.order(), k, argmin);
    return res;
}

void check_subset_size(const Graph& g, int k) {
    if (k < 2 || k > g.order()) throw Error("subset size k must satisfy 2 <= k <= order");
}

}  // namespace

KappaKResult kappa_k_graph_serial(const Graph& g, int k, Budget budget) {
    check_subset_size(g, k);
    const std::uint64_t total = subset_count(g.order(), k);
    std::vector<SubsetOutcome> outcomes;
    outcomes.reserve(total);
    // lexicographic walk, independent of unrank_subset
    std::vector<VertexId> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        outcomes.push_back(solve_subset(g, subset, budget));
        int i = k - 1;
        while (i >= 0 && subset[i] == g.order() - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return reduce_outcomes(g, k, outcomes);
}

KappaKResult kappa_k_graph(const Graph& g, int k, Budget budget) {
    check_subset_size(g, k);
    const auto total = static_cast<std::int64_t>(subset_count(g.order(), k));
    std::vector<SubsetOutcome> outcomes(static_cast<std::size_t>(total));
    std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            outcomes[i] = solve_subset(g, unrank_subset(g.order(), k, static_cast<std::uint64_t>(i)), budget);
        } catch (const std::exception& e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) throw Error(failure);
    return reduce_outcomes(g, k, outcomes);
}

}  // namespace gencon
