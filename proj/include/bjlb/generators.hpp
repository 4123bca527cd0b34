#pragma once

#include <cstdint>
#include <random>

#include "bjlb/bochner.hpp"

namespace bjlb::gen {

// Deterministic cross-platform randomness: mt19937_64 has a pinned sequence
// and the [0,1) mapping below avoids distribution objects, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool bernoulli(double p) { return uniform() < p; }
  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Per-trial seed derived from the config seed so trials are independent of
// scheduling order.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t salt, std::uint64_t trial);

// Pinned generator ranges: atoms in [2,8], weights in (0.1, 2], dims in
// [1,6], lp exponents from {1.5, 2, 3, 4}, entries in [-1, 1].
DiscreteMeasure random_measure(Rng& r);
DiscreteMeasure random_measure(Rng& r, std::size_t atoms);
SmoothSpace random_smooth_space(Rng& r, Field field, int min_dim = 1, int max_dim = 6);
Vec random_vector(Rng& r, const SmoothSpace& sp);
Vec random_nonzero_vector(Rng& r, const SmoothSpace& sp, double min_norm = 1e-2);
BochnerFunction random_function(Rng& r, const DiscreteMeasure& mu, const SmoothSpace& sp);
// Scalar function whose value at each atom is zeroed with probability
// zero_prob (the L1 criteria need nonempty zero sets to have teeth).
BochnerFunction random_scalar_function(Rng& r, const DiscreteMeasure& mu, Field field,
                                       double zero_prob);

// Exact one-step corrections that manufacture orthogonal pairs; each kills
// the relevant criterion integral identically, up to roundoff.
Vec orthogonalize_vector(const SmoothSpace& sp, const Vec& x, const Vec& y);
BochnerFunction orthogonalize_lp(const BochnerFunction& f, const BochnerFunction& g, double p,
                                 double eps_zero);
BochnerFunction orthogonalize_l1(const BochnerFunction& f, const BochnerFunction& g,
                                 double eps_zero);

}  // namespace bjlb::gen
