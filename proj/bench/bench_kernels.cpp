// Times the serial reference reductions against the parallel ones on sizes
// around and far above the dispatch threshold.  Run manually; not part of
// the test suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "bjlb/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class Fn>
double time_best_of(int reps, const Fn& fn, double& sink) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock_type::now();
    sink += fn();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  std::printf("%12s %14s %14s %9s\n", "n", "serial_ms", "parallel_ms", "speedup");
  double sink = 0.0;
  for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 16, std::size_t{1} << 20,
                        std::size_t{1} << 23}) {
    std::vector<double> w(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 1.0 + 0.5 * dist(eng);
      v[i] = std::abs(dist(eng)) + 0.1;
    }

    double a = bjlb::kernels::weighted_pow_sum_serial(w, v, 3.0);
    double b = bjlb::kernels::weighted_pow_sum_parallel(w, v, 3.0);
    double rel = std::abs(a - b) / std::abs(a);
    if (rel > 1e-12) {
      std::printf("MISMATCH at n=%zu: serial %.17g parallel %.17g\n", n, a, b);
      return 1;
    }

    int reps = n >= (std::size_t{1} << 20) ? 5 : 20;
    double ts = time_best_of(reps, [&] { return bjlb::kernels::weighted_pow_sum_serial(w, v, 3.0); },
                             sink);
    double tp = time_best_of(
        reps, [&] { return bjlb::kernels::weighted_pow_sum_parallel(w, v, 3.0); }, sink);
    std::printf("%12zu %14.3f %14.3f %8.2fx\n", n, ts * 1e3, tp * 1e3, ts / std::max(tp, 1e-12));
  }
  std::printf("(checksum %g)\n", sink);
  return 0;
}
