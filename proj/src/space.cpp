#include "bjlb/space.hpp"

#include <cmath>
#include <stdexcept>

namespace bjlb {

SmoothSpace SmoothSpace::lp(Field field, int dim, double exponent, double max_exponent) {
  if (dim < 1) throw std::invalid_argument("space dimension must be positive");
  if (!(exponent > 1.0) || !std::isfinite(exponent))
    throw std::invalid_argument("lp exponent must satisfy 1 < p < inf (l^1 and l^inf norms are not smooth)");
  if (exponent > max_exponent)
    throw std::invalid_argument("lp exponent exceeds the configured cap; raise max_exponent explicitly");
  return SmoothSpace(field, dim, SpaceKind::lp, exponent);
}

SmoothSpace SmoothSpace::hilbert(Field field, int dim) {
  if (dim < 1) throw std::invalid_argument("space dimension must be positive");
  return SmoothSpace(field, dim, SpaceKind::hilbert, 2.0);
}

SmoothSpace SmoothSpace::scalar(Field field) {
  return SmoothSpace(field, 1, SpaceKind::scalar, 1.0);
}

cplx Functional::operator()(const Vec& z) const {
  if (z.size() != coeffs.size()) throw std::invalid_argument("functional applied to wrong dimension");
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * z[i];
  return acc;
}

void check_vector(const SmoothSpace& sp, const Vec& v) {
  if (v.size() != static_cast<std::size_t>(sp.dim()))
    throw std::invalid_argument("vector dimension does not match the space");
  for (const cplx& c : v) {
    if (!is_finite(c)) throw std::invalid_argument("vector entries must be finite");
    if (sp.field() == Field::real && c.imag() != 0.0)
      throw std::invalid_argument("vector in a real space must have real entries");
  }
}

double norm(const SmoothSpace& sp, const Vec& v) {
  check_vector(sp, v);
  switch (sp.kind()) {
    case SpaceKind::scalar:
      return std::abs(v[0]);
    case SpaceKind::hilbert: {
      double acc = 0.0;
      for (const cplx& c : v) acc += std::norm(c);
      return std::sqrt(acc);
    }
    case SpaceKind::lp: {
      double p = sp.exponent();
      double acc = 0.0;
      for (const cplx& c : v) acc += std::pow(std::abs(c), p);
      return std::pow(acc, 1.0 / p);
    }
  }
  return 0.0;
}

Functional support_functional(const SmoothSpace& sp, const Vec& x) {
  double nx = norm(sp, x);
  if (nx == 0.0) throw no_support_functional();
  Functional F;
  F.coeffs.resize(x.size());
  switch (sp.kind()) {
    case SpaceKind::scalar:
      F.coeffs[0] = conj_sign(x[0]);
      break;
    case SpaceKind::hilbert:
      for (std::size_t i = 0; i < x.size(); ++i) F.coeffs[i] = std::conj(x[i]) / nx;
      break;
    case SpaceKind::lp: {
      double p = sp.exponent();
      double scale = std::pow(nx, p - 1.0);
      for (std::size_t i = 0; i < x.size(); ++i)
        F.coeffs[i] = std::pow(std::abs(x[i]), p - 1.0) * conj_sign(x[i]) / scale;
      break;
    }
  }
  return F;
}

double phase_gateaux(const SmoothSpace& sp, const Vec& x, const Vec& y, double phi) {
  check_vector(sp, y);
  if (norm(sp, x) == 0.0) return norm(sp, y);
  Functional F = support_functional(sp, x);
  cplx phase = sp.field() == Field::real ? cplx(std::cos(phi), 0.0)
                                         : cplx(std::cos(phi), std::sin(phi));
  return (phase * F(y)).real();
}

double dual_norm(const SmoothSpace& sp, const Functional& F) {
  switch (sp.kind()) {
    case SpaceKind::scalar:
      return std::abs(F.coeffs[0]);
    case SpaceKind::hilbert: {
      double acc = 0.0;
      for (const cplx& c : F.coeffs) acc += std::norm(c);
      return std::sqrt(acc);
    }
    case SpaceKind::lp: {
      double q = sp.exponent() / (sp.exponent() - 1.0);
      double acc = 0.0;
      for (const cplx& c : F.coeffs) acc += std::pow(std::abs(c), q);
      return std::pow(acc, 1.0 / q);
    }
  }
  return 0.0;
}

} // namespace bjlb
