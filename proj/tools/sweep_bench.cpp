// Benchmark: the OpenMP sweep kernel against the serial reference, on the
// same instance stream, verifying identical reports.

#include <cstdlib>
#include <iostream>

#include "gspin/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
    using namespace gspin;
    int threads = 0;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 2) threads = 2;

    for (Family family : {Family::B, Family::D}) {
        SweepConfig cfg;
        cfg.family = family;
        cfg.max_r = 4;
        cfg.max_block = 2;
        cfg.alphabet = 4;
        cfg.checks = {Check::rgroup_equivalence, Check::rgroup_structure, Check::cocycle,
                      Check::elliptic, Check::sign_characters};
        cfg.threads = 1;

        const SweepReport serial = run_sweep_serial(cfg);
        cfg.threads = threads;
        const SweepReport parallel = run_sweep_parallel(cfg);

        const char* name = family == Family::B ? "B" : "D";
        std::cout << "family " << name << ": " << serial.total << " instances\n";
        std::cout << "  serial   " << serial.elapsed.count() << " ms\n";
        std::cout << "  parallel " << parallel.elapsed.count() << " ms (" << threads
                  << " threads)\n";
        if (parallel.elapsed.count() > 0)
            std::cout << "  speedup  " << 100 * serial.elapsed.count() / parallel.elapsed.count()
                      << "%\n";
        if (!same_outcome(serial, parallel)) {
            std::cout << "MISMATCH between serial and parallel reports\n";
            return 1;
        }
        if (!serial.passed()) {
            std::cout << "sweep failures present\n";
            return 1;
        }
    }
    std::cout << "reports identical\n";
    return 0;
}
