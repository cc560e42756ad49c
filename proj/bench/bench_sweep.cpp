// Compares the serial reference sweep against the OpenMP path.

#include <chrono>
#include <cstdio>
#include <functional>

#include "sgc/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_best_of(int repeats, const std::function<sgc::SweepTable()>& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = Clock::now();
        volatile double sink = fn().back().abs_chi2;
        (void)sink;
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (elapsed < best) best = elapsed;
    }
    return best;
}

void report(const char* label, const sgc::SweepConfig& config, int repeats) {
    const double serial = time_best_of(repeats, [&] { return sgc::run_sweep_serial(config); });
    const double parallel = time_best_of(repeats, [&] { return sgc::run_sweep(config); });
    const std::size_t rows = config.p_values.size() * static_cast<std::size_t>(config.delta_count);
    std::printf("%-28s %8zu rows  serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx\n", label,
                rows, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
    sgc::SweepConfig analytic;
    analytic.p_values = {0.0, 0.99};
    analytic.delta_count = 200001;
    report("analytic sweep", analytic, 3);

    sgc::SweepConfig full = analytic;
    full.mode = sgc::SweepMode::kFull;
    full.delta_count = 201;
    report("full sweep (with oracle)", full, 3);

    std::printf("threads: %d (cap with SGC_THREADS)\n", sgc::sweep_thread_count());
    return 0;
}
