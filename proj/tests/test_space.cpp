#include <doctest.h>

#include <cmath>

#include "bjlb/space.hpp"

using namespace bjlb;

TEST_CASE("space factories validate their arguments") {
  CHECK_THROWS_AS(SmoothSpace::lp(Field::real, 0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(SmoothSpace::lp(Field::real, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SmoothSpace::lp(Field::real, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(SmoothSpace::lp(Field::real, 3, 9.0), std::invalid_argument);
  CHECK_NOTHROW(SmoothSpace::lp(Field::real, 3, 9.0, 12.0));
  CHECK_THROWS_AS(SmoothSpace::hilbert(Field::complex, 0), std::invalid_argument);
  SmoothSpace sc = SmoothSpace::scalar(Field::complex);
  CHECK(sc.dim() == 1);
  CHECK(sc.kind() == SpaceKind::scalar);
}

TEST_CASE("norms match hand-computed values") {
  SmoothSpace l3 = SmoothSpace::lp(Field::real, 3, 3.0);
  Vec v{cplx(1.0, 0.0), cplx(-2.0, 0.0), cplx(3.0, 0.0)};
  CHECK(norm(l3, v) == doctest::Approx(std::cbrt(36.0)).epsilon(1e-15));

  SmoothSpace h2 = SmoothSpace::hilbert(Field::complex, 2);
  Vec x{cplx(0.0, 1.0), cplx(2.0, 0.0)};
  CHECK(norm(h2, x) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));

  SmoothSpace sc = SmoothSpace::scalar(Field::complex);
  Vec s{cplx(3.0, -4.0)};
  CHECK(norm(sc, s) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("check_vector enforces dimension, finiteness and the field") {
  SmoothSpace r2 = SmoothSpace::hilbert(Field::real, 2);
  Vec short_v{cplx(1.0, 0.0)};
  CHECK_THROWS_AS(check_vector(r2, short_v), std::invalid_argument);
  Vec imag_v{cplx(1.0, 0.5), cplx(0.0, 0.0)};
  CHECK_THROWS_AS(check_vector(r2, imag_v), std::invalid_argument);
  Vec inf_v{cplx(1.0, 0.0), cplx(INFINITY, 0.0)};
  CHECK_THROWS_AS(check_vector(r2, inf_v), std::invalid_argument);
  Vec ok{cplx(1.0, 0.0), cplx(-2.0, 0.0)};
  CHECK_NOTHROW(check_vector(r2, ok));
}

TEST_CASE("support functional has the closed lp form") {
  SmoothSpace l3 = SmoothSpace::lp(Field::real, 3, 3.0);
  Vec v{cplx(1.0, 0.0), cplx(-2.0, 0.0), cplx(3.0, 0.0)};
  double n = std::cbrt(36.0);
  Functional F = support_functional(l3, v);
  // coeff_i = |v_i|^{p-1} sign(v_i) / ||v||^{p-1}
  CHECK(F.coeffs[0].real() == doctest::Approx(1.0 / (n * n)).epsilon(1e-14));
  CHECK(F.coeffs[1].real() == doctest::Approx(-4.0 / (n * n)).epsilon(1e-14));
  CHECK(F.coeffs[2].real() == doctest::Approx(9.0 / (n * n)).epsilon(1e-14));
  CHECK(std::abs(F(v) - cplx(n, 0.0)) <= 1e-13 * n);
  CHECK(dual_norm(l3, F) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("support functional of a hilbert vector is the conjugate direction") {
  SmoothSpace h = SmoothSpace::hilbert(Field::complex, 5);
  Vec x{cplx(0.0, 1.0), cplx(0.0, -1.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  Functional F = support_functional(h, x);
  double r2 = std::sqrt(2.0);
  CHECK(std::abs(F.coeffs[0] - cplx(0.0, -1.0) / r2) <= 1e-15);
  CHECK(std::abs(F.coeffs[1] - cplx(0.0, 1.0) / r2) <= 1e-15);
  // F_x(y) = <y,x>/||x|| for y = (i,0,-i,0,0) comes out 1/sqrt(2)
  Vec y{cplx(0.0, 1.0), cplx(0.0, 0.0), cplx(0.0, -1.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  CHECK(std::abs(F(y) - cplx(1.0 / r2, 0.0)) <= 1e-15);
}

TEST_CASE("support functional on scalars is the conjugate sign") {
  SmoothSpace sc = SmoothSpace::scalar(Field::complex);
  Vec s{cplx(3.0, -4.0)};
  Functional F = support_functional(sc, s);
  CHECK(std::abs(F.coeffs[0] - conj_sign(cplx(3.0, -4.0))) <= 1e-15);
  Vec zero{cplx(0.0, 0.0)};
  CHECK_THROWS_AS(support_functional(sc, zero), no_support_functional);
  SmoothSpace l4 = SmoothSpace::lp(Field::real, 2, 4.0);
  Vec z2{cplx(0.0, 0.0), cplx(0.0, 0.0)};
  CHECK_THROWS_AS(support_functional(l4, z2), no_support_functional);
}

TEST_CASE("phase derivative of the norm matches a finite difference") {
  SmoothSpace l15 = SmoothSpace::lp(Field::complex, 3, 1.5);
  Vec x{cplx(0.7, 0.2), cplx(-0.5, 0.4), cplx(0.3, -0.9)};
  Vec y{cplx(0.1, -0.3), cplx(0.6, 0.2), cplx(-0.4, 0.1)};
  for (double phi : {0.0, 1.1, 2.7}) {
    double g = phase_gateaux(l15, x, y, phi);
    double t = 1e-7;
    cplx ph(std::cos(phi), std::sin(phi));
    Vec z(3);
    for (int i = 0; i < 3; ++i) z[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + t * ph * y[static_cast<std::size_t>(i)];
    double fd = (norm(l15, z) - norm(l15, x)) / t;
    CHECK(std::abs(g - fd) <= 1e-6);
  }
  // at x = 0 the one-sided derivative is the norm of the direction
  Vec zero{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  CHECK(phase_gateaux(l15, zero, y, 0.4) == doctest::Approx(norm(l15, y)).epsilon(1e-14));
}

TEST_CASE("scalar sign conventions") {
  CHECK(sign(cplx(0.0, 0.0)) == cplx(0.0, 0.0));
  CHECK(std::abs(sign(cplx(0.0, 2.0)) - cplx(0.0, 1.0)) <= 1e-15);
  CHECK(std::abs(conj_sign(cplx(0.0, 2.0)) - cplx(0.0, -1.0)) <= 1e-15);
  CHECK(sign(cplx(-3.0, 0.0)) == cplx(-1.0, 0.0));
}
