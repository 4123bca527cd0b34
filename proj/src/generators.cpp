#include "bjlb/generators.hpp"

#include <cmath>

namespace bjlb::gen {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

cplx random_entry(Rng& r, Field field) {
  double re = r.uniform(-1.0, 1.0);
  double im = field == Field::complex ? r.uniform(-1.0, 1.0) : 0.0;
  return {re, im};
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t salt, std::uint64_t trial) {
  return splitmix64(splitmix64(base ^ salt) + trial);
}

DiscreteMeasure random_measure(Rng& r) {
  return random_measure(r, static_cast<std::size_t>(r.uniform_int(2, 8)));
}

DiscreteMeasure random_measure(Rng& r, std::size_t atoms) {
  std::vector<double> w(atoms);
  for (double& x : w) x = 2.0 - 1.9 * r.uniform();  // (0.1, 2]
  std::vector<Atom> a(atoms);
  for (std::size_t k = 0; k < atoms; ++k) a[k].label = {static_cast<std::int64_t>(k + 1)};
  return DiscreteMeasure(std::move(a), std::move(w));
}

SmoothSpace random_smooth_space(Rng& r, Field field, int min_dim, int max_dim) {
  int dim = static_cast<int>(r.uniform_int(min_dim, max_dim));
  if (r.bernoulli(0.5)) return SmoothSpace::hilbert(field, dim);
  static const double kExponents[] = {1.5, 2.0, 3.0, 4.0};
  return SmoothSpace::lp(field, dim, kExponents[r.uniform_int(0, 3)]);
}

Vec random_vector(Rng& r, const SmoothSpace& sp) {
  Vec v(static_cast<std::size_t>(sp.dim()));
  for (cplx& c : v) c = random_entry(r, sp.field());
  return v;
}

Vec random_nonzero_vector(Rng& r, const SmoothSpace& sp, double min_norm) {
  for (;;) {
    Vec v = random_vector(r, sp);
    if (norm(sp, v) >= min_norm) return v;
  }
}

BochnerFunction random_function(Rng& r, const DiscreteMeasure& mu, const SmoothSpace& sp) {
  std::vector<Vec> vals(mu.size());
  for (Vec& v : vals) v = random_vector(r, sp);
  return BochnerFunction(mu, sp, std::move(vals));
}

BochnerFunction random_scalar_function(Rng& r, const DiscreteMeasure& mu, Field field,
                                       double zero_prob) {
  SmoothSpace sp = SmoothSpace::scalar(field);
  std::vector<Vec> vals(mu.size());
  for (Vec& v : vals)
    v = r.bernoulli(zero_prob) ? Vec{cplx(0.0, 0.0)} : Vec{random_entry(r, field)};
  return BochnerFunction(mu, sp, std::move(vals));
}

Vec orthogonalize_vector(const SmoothSpace& sp, const Vec& x, const Vec& y) {
  double nx = norm(sp, x);
  if (nx == 0.0) return y;
  Functional F = support_functional(sp, x);
  cplx beta = F(y) / nx;  // F_x(y') = F_x(y) - beta F_x(x) = 0
  Vec out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] - beta * x[i];
  return out;
}

BochnerFunction orthogonalize_lp(const BochnerFunction& f, const BochnerFunction& g, double p,
                                 double eps_zero) {
  const SmoothSpace& sp = f.space();
  cplx t_g(0.0, 0.0);
  double norm_p = 0.0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    double nfs = norm(sp, f.value(s));
    double w = f.measure().weight(s);
    norm_p += w * std::pow(nfs, p);
    if (nfs <= eps_zero) continue;
    t_g += w * std::pow(nfs, p - 1.0) * support_functional(sp, f.value(s))(g.value(s));
  }
  // T is linear and T(f) = ||f||_p^p, so g - (T(g)/||f||_p^p) f zeroes it.
  if (norm_p == 0.0) return g;
  return combine(1.0, g, -t_g / norm_p, f);
}

BochnerFunction orthogonalize_l1(const BochnerFunction& f, const BochnerFunction& g,
                                 double eps_zero) {
  const SmoothSpace& sp = f.space();
  cplx c(0.0, 0.0);
  double norm_1 = 0.0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    double nfs = norm(sp, f.value(s));
    if (nfs <= eps_zero) continue;
    double w = f.measure().weight(s);
    norm_1 += w * nfs;
    c += w * support_functional(sp, f.value(s))(g.value(s));
  }
  if (norm_1 == 0.0) return g;
  return combine(1.0, g, -c / norm_1, f);
}

}  // namespace bjlb::gen
