// Serial reference vs OpenMP kernels on fixed seeded workloads.
// Prints one line per kernel: serial seconds, parallel seconds, speedup,
// and whether the two results are identical.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gencon/harness.hpp"
#include "gencon/oracle.hpp"
#include "gencon/random.hpp"
#include "gencon/solver.hpp"

using namespace gencon;

namespace {

template <class F>
double seconds(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool same) {
    std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads %d\n", omp_get_max_threads());
#else
    std::printf("threads 1 (built without OpenMP)\n");
#endif
    bool all_same = true;

    {
        Graph g = petersen_graph();
        KappaKResult s, p;
        double ts = seconds([&] { s = kappa_k_graph_serial(g, 4); });
        double tp = seconds([&] { p = kappa_k_graph(g, 4); });
        bool same = s.value == p.value && s.subset == p.subset && s.exact == p.exact;
        all_same &= same;
        row("kappa_k petersen k=4", ts, tp, same);
    }
    {
        Rng rng(77);
        Graph g = random_graph(9, 0.5, rng);
        KappaKResult s, p;
        double ts = seconds([&] { s = kappa_k_graph_serial(g, 3); });
        double tp = seconds([&] { p = kappa_k_graph(g, 3); });
        bool same = s.value == p.value && s.subset == p.subset && s.exact == p.exact;
        all_same &= same;
        row("kappa_k G(9,0.5) k=3", ts, tp, same);
    }
    {
        Graph g = complete_graph(8);
        TerminalSet t(g, {0, 1, 2, 3});
        std::vector<Tree> s, p;
        double ts = seconds([&] { s = oracle_steiner_trees_serial(g, t); });
        double tp = seconds([&] { p = oracle_steiner_trees(g, t); });
        all_same &= s == p;
        row("oracle trees K8 |S|=4", ts, tp, s == p);
    }
    {
        Rng rng(5);
        std::vector<ThreeDMInstance> batch;
        for (int i = 0; i < 60; ++i) batch.push_back(random_3dm(3, 6, rng));
        RoundtripReport s, p;
        double ts = seconds([&] { s = roundtrip_3dm_serial(batch, Budget{}); });
        double tp = seconds([&] { p = roundtrip_3dm(batch, Budget{}); });
        bool same = s.yes == p.yes && s.no == p.no && s.unknown == p.unknown && s.disagree == p.disagree;
        all_same &= same;
        row("roundtrip 3dm n=3 m=6 x60", ts, tp, same);
    }
    {
        Rng rng(6);
        std::vector<CnfFormula> batch;
        for (int i = 0; i < 300; ++i) batch.push_back(random_cnf(4, 6, rng));
        RoundtripReport s, p;
        double ts = seconds([&] { s = roundtrip_3sat_serial(batch, Budget{}); });
        double tp = seconds([&] { p = roundtrip_3sat(batch, Budget{}); });
        bool same = s.yes == p.yes && s.no == p.no && s.unknown == p.unknown && s.disagree == p.disagree;
        all_same &= same;
        row("roundtrip 3sat n=4 m=6 x300", ts, tp, same);
    }
    return all_same ? 0 : 1;
}
