// Serial vs. OpenMP timings for the step kernel and the sweep driver.
// usage: opact_bench [agents] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "opact/config.hpp"
#include "opact/engine.hpp"
#include "opact/sweep.hpp"

using namespace opact;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  omp_set_num_threads(threads);

  ScenarioConfig c;
  c.n = n;
  c.openness = 0.1;
  c.commitment = 0.3;
  c.seed = 1;
  const Scenario s = build_population(c);

  Population serial_out, parallel_out;
  const double t_serial = best_of(5, [&] { serial_out = step(s.population, s.graph); });
  const double t_parallel = best_of(5, [&] { parallel_out = step_parallel(s.population, s.graph); });
  std::printf("step      n=%zu threads=%d  serial %.3f ms  parallel %.3f ms  speedup %.2fx  identical=%s\n", n,
              threads, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
              serial_out == parallel_out ? "yes" : "no");

  auto spec = std::get<SweepSpec>(expand_preset("sweep-desk"));
  const double sweep_serial = best_of(1, [&] { run_sweep(spec, 1); });
  const double sweep_parallel = best_of(1, [&] { run_sweep(spec, threads); });
  std::printf("sweep     sweep-desk        serial %.3f s   parallel %.3f s   speedup %.2fx\n", sweep_serial,
              sweep_parallel, sweep_serial / sweep_parallel);
}
