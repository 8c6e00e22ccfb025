// Timing comparison of the OpenMP kernels against their serial reference
// implementations: the violation sweep and the pairwise distance statistics.
// Outputs one line per kernel with serial time, parallel time, speedup, and
// an equality check of the results.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "ttp/analytics.hpp"
#include "ttp/diversity.hpp"
#include "ttp/generator.hpp"

using namespace ttp;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());

  {
    SweepConfig cfg;
    for (int n = 20; n <= 50; n += 2) cfg.team_sizes.push_back(n);
    cfg.samples_per_size = 400;
    cfg.k_values = {1, 2, 3, 4, 5, 6};
    cfg.master_seed = 42;

    auto start = clock_type::now();
    const std::vector<SweepRecord> serial = run_sweep_serial(cfg);
    const double serial_time = seconds_since(start);

    start = clock_type::now();
    const std::vector<SweepRecord> parallel = run_sweep(cfg);
    const double parallel_time = seconds_since(start);

    std::printf("sweep (16 sizes x 400 samples x 8 counters)\n");
    std::printf("  serial   %8.3f s\n", serial_time);
    std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n\n", parallel_time,
                serial_time / parallel_time,
                serial == parallel ? "identical" : "DIFFER");
  }

  {
    std::vector<Schedule> population;
    for (int i = 0; i < 1500; ++i) {
      population.push_back(random_schedule(GenConfig{10, 7}, static_cast<std::uint64_t>(i)));
    }

    auto start = clock_type::now();
    const DiffStats serial = pairwise_stats_serial(population, DiffMode::Full);
    const double serial_time = seconds_since(start);

    start = clock_type::now();
    const DiffStats parallel = pairwise_stats(population, DiffMode::Full);
    const double parallel_time = seconds_since(start);

    std::printf("pairwise diff (1500 schedules, %llu pairs)\n",
                static_cast<unsigned long long>(serial.pair_count));
    std::printf("  serial   %8.3f s\n", serial_time);
    std::printf("  parallel %8.3f s   speedup %.2fx   results %s\n", parallel_time,
                serial_time / parallel_time,
                (serial.mean == parallel.mean && serial.histogram == parallel.histogram)
                    ? "identical"
                    : "DIFFER");
  }
  return 0;
}
