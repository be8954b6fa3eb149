// Compares the serial reference kernels against the OpenMP ones: all-source
// BFS diameter sweeps and the exact branch-and-bound solver.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ont/exact.hpp"
#include "ont/generators.hpp"
#include "ont/orientation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ont;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

Orientation arbitrary_strong_orientation(const PlaneGraph& g) {
    // outer cycle clockwise, inner edges by increasing (u,v); fix sinks by BFS retries
    std::vector<Arc> arcs;
    auto cyc = g.outer_cycle();
    std::vector<char> on_boundary_edge(g.edge_count(), 0);
    for (size_t i = 0; i < cyc.size(); ++i) {
        arcs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    for (const auto& [u, v] : g.edges()) {
        bool boundary = false;
        for (size_t i = 0; i < cyc.size(); ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if ((a == u && b == v) || (a == v && b == u)) boundary = true;
        }
        if (!boundary) arcs.emplace_back((u + v) % 2 ? Arc{u, v} : Arc{v, u});
    }
    return Orientation(g.vertex_count(), std::move(arcs));
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 2000;
    int reps = argc > 2 ? std::atoi(argv[2]) : 5;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp\n");
#endif

    std::printf("== all-source BFS diameter sweeps (n=%d, %d reps) ==\n", n, reps);
    PlaneGraph g = random_near_triangulation(n, 42, 0.5);
    Orientation d = arbitrary_strong_orientation(g);
    auto t0 = Clock::now();
    std::optional<int> ref;
    for (int r = 0; r < reps; ++r) ref = diameter_serial(d);
    auto t1 = Clock::now();
    std::optional<int> par;
    for (int r = 0; r < reps; ++r) par = diameter(d);
    auto t2 = Clock::now();
    double ts = secs(t0, t1) / reps, tp = secs(t1, t2) / reps;
    std::printf("serial   %8.3f s   diameter=%s\n", ts, ref ? std::to_string(*ref).c_str() : "inf");
    std::printf("parallel %8.3f s   diameter=%s\n", tp, par ? std::to_string(*par).c_str() : "inf");
    if (ref != par) {
        std::printf("MISMATCH between serial and parallel kernels\n");
        return 1;
    }
    std::printf("speedup  %8.2fx\n\n", ts / tp);

    std::printf("== exact solver, sequential vs split subtrees ==\n");
    PlaneGraph s = snake(13);
    ExactOptions seq;
    auto t3 = Clock::now();
    ExactResult r1 = oriented_diameter_exact(s, seq);
    auto t4 = Clock::now();
    ExactOptions par_opts;
    par_opts.parallel = true;
    ExactResult r2 = oriented_diameter_exact(s, par_opts);
    auto t5 = Clock::now();
    std::printf("sequential %8.3f s  value=%d nodes=%llu\n", secs(t3, t4), r1.value.value_or(-1),
                static_cast<unsigned long long>(r1.nodes));
    std::printf("parallel   %8.3f s  value=%d nodes=%llu\n", secs(t4, t5), r2.value.value_or(-1),
                static_cast<unsigned long long>(r2.nodes));
    if (r1.value != r2.value) {
        std::printf("MISMATCH between sequential and parallel exact values\n");
        return 1;
    }
    std::printf("speedup    %8.2fx\n", secs(t3, t4) / secs(t4, t5));
    return 0;
}
