// Compares the OpenMP lattice kernels against the serial reference scans and
// tracks the growth of the completeness checker on the matching family paired
// with its transversal kernel.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgt/duality.hpp"
#include "sgt/families.hpp"
#include "sgt/generators.hpp"
#include "sgt/oracle.hpp"
#include "sgt/reference.hpp"
#include "sgt/transversal.hpp"

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& f) {
    const double t0 = now_ms();
    f();
    return now_ms() - t0;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    std::printf("\n-- subset-lattice closure + extraction, parallel vs serial reference --\n");
    std::printf("%4s %8s %12s %12s %8s\n", "n", "edges", "parallel-ms", "serial-ms", "speedup");
    sgt::Rng rng(20240511);
    for (int n : {14, 16, 18, 20}) {
        const sgt::Hypergraph h = sgt::random_antichain(rng, n, 3 * n);
        sgt::Hypergraph a(n), b(n);
        const double tp = time_ms([&] { a = sgt::brute_transversal_kernel(h, n); });
        const double ts = time_ms([&] { b = sgt::reference::brute_transversal_kernel(h); });
        if (!a.same_edge_set(b)) {
            std::printf("MISMATCH at n=%d\n", n);
            return 1;
        }
        std::printf("%4d %8zu %12.2f %12.2f %8.2fx\n", n, h.size(), tp, ts, ts / tp);
    }

    std::printf("\n-- exhaustive property scan, parallel vs serial reference --\n");
    std::printf("%4s %12s %12s %8s\n", "n", "parallel-ms", "serial-ms", "speedup");
    for (int n : {14, 16, 18, 20}) {
        const sgt::Hypergraph h = sgt::random_antichain(rng, n, 3 * n);
        sgt::OracleProperties pa{}, pb{};
        const double tp = time_ms([&] { pa = sgt::oracle_properties(h, n); });
        const double ts = time_ms([&] { pb = sgt::reference::oracle_properties(h); });
        if (pa.proper != pb.proper || pa.strong != pb.strong) {
            std::printf("MISMATCH at n=%d\n", n);
            return 1;
        }
        std::printf("%4d %12.2f %12.2f %8.2fx\n", n, tp, ts, ts / tp);
    }

    std::printf("\n-- completeness checker on (H_m, lambda(H_m)), growing input --\n");
    std::printf("%4s %8s %8s %12s\n", "m", "|H|", "|K|", "time-ms");
    for (int m = 2; m <= 8; ++m) {
        const sgt::Hypergraph h = sgt::family("example3", m);
        const sgt::Hypergraph k = sgt::minimal_transversals(h);
        sgt::CompletenessResult r;
        const double t = time_ms([&] { r = sgt::is_complete(h, k); });
        std::printf("%4d %8zu %8zu %12.3f%s\n", m, h.size(), k.size(), t,
                    r.complete ? "" : "  (INCOMPLETE?)");
    }
    return 0;
}
