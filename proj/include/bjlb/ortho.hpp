#pragma once

#include <optional>
#include <string>

#include "bjlb/bochner.hpp"

namespace bjlb {

enum class Verdict { orthogonal, not_orthogonal, borderline };

const char* verdict_name(Verdict v);

// Decision record for one orthogonality test.  `implied` is the verdict the
// raw comparison gives and is never borderline; `verdict` downgrades it to
// borderline when the margin is inside the criterion's ambiguity band, where
// neither the criterion nor the direct oracle can be trusted against each
// other.  Randomized suites skip borderline trials instead of resolving them.
struct OrthoCertificate {
  std::string criterion;
  Verdict verdict = Verdict::borderline;
  Verdict implied = Verdict::borderline;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::optional<cplx> witness;

  bool borderline() const { return verdict == Verdict::borderline; }
};

// eps_zero for data that went through floating-point arithmetic; constructed
// rational data should pass 0 instead.  The choice is explicit at every call.
double float_eps_zero(const BochnerFunction& f);

// Definition-level oracle: minimizes ||f + lambda g||_p over the disc
// |lambda| <= 2 ||f||_p / ||g||_p (outside it the norm exceeds ||f||_p).
// lhs = minimum found, rhs = ||f||_p; witness is a strictly decreasing
// lambda when not orthogonal.
OrthoCertificate bj_direct(const BochnerFunction& f, const BochnerFunction& g, double p,
                           double tol);

// Phase-derivative test: min over phases phi of the one-sided derivative
// (||f + t e^{i phi} g||_p - ||f||_p) / t at t = 1e-7 ||f||_p / max(||g||_p, 1).
// Orthogonal iff the minimum is >= -tol.  Real field uses phi in {0, pi}.
OrthoCertificate bj_keckic(const BochnerFunction& f, const BochnerFunction& g, double p,
                           int n_phases, double tol);

// L1 integral criterion for vector-valued f, g:
//   |sum_{s outside Z(f)} w_s F_{f(s)}(g(s))| <= sum_{s in Z(f)} w_s ||g(s)||.
// Complex field reduces the sup over unimodular alpha analytically to |c| and
// cross-checks it against a 720-point phase sweep.
OrthoCertificate bj_l1_criterion(const BochnerFunction& f, const BochnerFunction& g,
                                 double eps_zero, double tol);

// Lp integral criterion, 1 < p < inf:
//   sum_{s outside Z(f)} w_s ||f(s)||^{p-1} F_{f(s)}(g(s)) = 0,
// tested as |sum| <= tol * ||f||_p^{p-1} ||g||_p.
OrthoCertificate bj_lp_criterion(const BochnerFunction& f, const BochnerFunction& g, double p,
                                 double eps_zero, double tol);

// Scalar specializations (F_{f(s)} collapses to conj(sign f(s))).
OrthoCertificate bj_scalar_l1(const BochnerFunction& f, const BochnerFunction& g,
                              double eps_zero, double tol);
OrthoCertificate bj_scalar_lp(const BochnerFunction& f, const BochnerFunction& g, double p,
                              double tol);

// Single-vector test: x is orthogonal to y in a smooth space iff
// F_x(y) = 0 (James), tested as |F_x(y)| <= tol ||y||.  x = 0 is
// orthogonal to everything.
OrthoCertificate bj_vector(const SmoothSpace& sp, const Vec& x, const Vec& y, double tol);

}  // namespace bjlb
