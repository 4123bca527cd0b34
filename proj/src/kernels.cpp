#include "bjlb/kernels.hpp"

#include <cassert>
#include <cmath>

namespace bjlb::kernels {

namespace {
std::size_t g_threshold = 4096;

inline double pow_nonneg(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}
} // namespace

std::size_t parallel_threshold() { return g_threshold; }
void set_parallel_threshold(std::size_t n) { g_threshold = n; }

double weighted_sum_serial(std::span<const double> w, std::span<const double> v) {
  assert(w.size() == v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
  return acc;
}

double weighted_sum_parallel(std::span<const double> w, std::span<const double> v) {
  assert(w.size() == v.size());
  double acc = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.size());
#pragma omp parallel for reduction(+ : acc)
  for (std::ptrdiff_t i = 0; i < n; ++i) acc += w[i] * v[i];
  return acc;
}

double weighted_sum(std::span<const double> w, std::span<const double> v) {
  return w.size() >= g_threshold ? weighted_sum_parallel(w, v) : weighted_sum_serial(w, v);
}

double weighted_pow_sum_serial(std::span<const double> w, std::span<const double> v, double p) {
  assert(w.size() == v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * pow_nonneg(v[i], p);
  return acc;
}

double weighted_pow_sum_parallel(std::span<const double> w, std::span<const double> v, double p) {
  assert(w.size() == v.size());
  double acc = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.size());
#pragma omp parallel for reduction(+ : acc)
  for (std::ptrdiff_t i = 0; i < n; ++i) acc += w[i] * pow_nonneg(v[i], p);
  return acc;
}

double weighted_pow_sum(std::span<const double> w, std::span<const double> v, double p) {
  return w.size() >= g_threshold ? weighted_pow_sum_parallel(w, v, p)
                                 : weighted_pow_sum_serial(w, v, p);
}

cplx weighted_csum_serial(std::span<const double> w, std::span<const cplx> z) {
  assert(w.size() == z.size());
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    re += w[i] * z[i].real();
    im += w[i] * z[i].imag();
  }
  return {re, im};
}

cplx weighted_csum_parallel(std::span<const double> w, std::span<const cplx> z) {
  assert(w.size() == z.size());
  double re = 0.0, im = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.size());
#pragma omp parallel for reduction(+ : re, im)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    re += w[i] * z[i].real();
    im += w[i] * z[i].imag();
  }
  return {re, im};
}

cplx weighted_csum(std::span<const double> w, std::span<const cplx> z) {
  return w.size() >= g_threshold ? weighted_csum_parallel(w, z) : weighted_csum_serial(w, z);
}

} // namespace bjlb::kernels
