#pragma once

#include <vector>

#include "bjlb/scalar.hpp"

namespace bjlb {

using Vec = std::vector<cplx>;

enum class SpaceKind { lp, hilbert, scalar };

/// Finite-dimensional normed space over R or C with a smooth norm: l^p with
/// 1 < p < inf, Euclidean, or the absolute value on the scalar field.
/// Non-smooth vector norms (l^1, l^inf) are not constructible.
class SmoothSpace {
public:
  static SmoothSpace lp(Field field, int dim, double exponent, double max_exponent = 8.0);
  static SmoothSpace hilbert(Field field, int dim);
  static SmoothSpace scalar(Field field);

  Field field() const { return field_; }
  int dim() const { return dim_; }
  SpaceKind kind() const { return kind_; }
  double exponent() const { return exponent_; } // lp kind only

  bool operator==(const SmoothSpace& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && kind_ == o.kind_ && exponent_ == o.exponent_;
  }

private:
  SmoothSpace(Field f, int d, SpaceKind k, double e) : field_(f), dim_(d), kind_(k), exponent_(e) {}
  Field field_;
  int dim_;
  SpaceKind kind_;
  double exponent_;
};

/// Bounded linear functional z -> sum_i coeffs_i z_i (complex-linear on
/// complex spaces).
struct Functional {
  Vec coeffs;

  cplx operator()(const Vec& z) const;
};

double norm(const SmoothSpace& sp, const Vec& v);

/// The norm-one functional F_x with F_x(x) = ||x||. Unique because the norm
/// is smooth; undefined at x = 0 (throws no_support_functional, callers
/// split off the zero set first).
Functional support_functional(const SmoothSpace& sp, const Vec& x);

/// One-sided derivative of the norm at x in direction e^{i phi} y:
/// Re(e^{i phi} F_x(y)) for x != 0, and ||y|| at x = 0. Real spaces use
/// phi in {0, pi}.
double phase_gateaux(const SmoothSpace& sp, const Vec& x, const Vec& y, double phi);

/// Conjugate-exponent (l^q or Euclidean) norm of the coefficient vector.
double dual_norm(const SmoothSpace& sp, const Functional& F);

void check_vector(const SmoothSpace& sp, const Vec& v);

} // namespace bjlb
