#include <doctest.h>

#include <cmath>

#include "bjlb/approx.hpp"
#include "bjlb/generators.hpp"

using namespace bjlb;

namespace {

BochnerFunction constant_one(const DiscreteMeasure& mu, const SmoothSpace& sp) {
  std::vector<Vec> vals(mu.size(), Vec(static_cast<std::size_t>(sp.dim()), cplx(0.0, 0.0)));
  for (Vec& v : vals) v[0] = cplx(1.0, 0.0);
  return BochnerFunction(mu, sp, vals);
}

}  // namespace

TEST_CASE("basis construction rejects degenerate sets") {
  DiscreteMeasure mu = counting_measure(3);
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 2);
  gen::Rng r(3);
  BochnerFunction g1 = gen::random_function(r, mu, h);
  BochnerFunction g2 = combine(cplx(2.0, 0.0), g1, cplx(0.0, 0.0), g1);
  CHECK_THROWS_AS(SubspaceBasis({}), std::exception);
  CHECK_THROWS_AS(SubspaceBasis({zero_function(mu, h)}), degenerate_basis);
  CHECK_THROWS_AS(SubspaceBasis({g1, g2}), degenerate_basis);
  SubspaceBasis ok({g1});
  CHECK(ok.size() == 1);
  CHECK(ok.gram_condition() >= 1.0);
}

TEST_CASE("weighted L2 projection onto a constant matches the closed form") {
  DiscreteMeasure mu({Atom{{1}, {}}, Atom{{2}, {}}}, {2.0, 1.0});
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 1);
  BochnerFunction f(mu, h, {{cplx(3.0, 0.0)}, {cplx(1.0, 0.0)}});
  SubspaceBasis G({constant_one(mu, h)});
  ApproxResult res = best_approx(f, G, 2.0, 1e-9);
  // (2*3 + 1*1) / (2+1)
  CHECK(std::abs(res.coefficients[0] - cplx(7.0 / 3.0, 0.0)) <= 1e-7);
  CHECK(res.optimality_residuals.size() == 1);
  CHECK(!res.f_in_span);
}

TEST_CASE("an L1 projection onto constants finds the weighted median") {
  DiscreteMeasure mu = counting_measure(3);
  SmoothSpace sc = SmoothSpace::scalar(Field::real);
  BochnerFunction f(mu, sc, {{cplx(0.0, 0.0)}, {cplx(1.0, 0.0)}, {cplx(10.0, 0.0)}});
  SubspaceBasis G({constant_one(mu, sc)});
  ApproxResult res = best_approx(f, G, 1.0, 1e-9);
  CHECK(std::abs(res.coefficients[0] - cplx(1.0, 0.0)) <= 1e-6);
  CHECK(res.residual_norm == doctest::Approx(10.0).epsilon(1e-6));
  // The solver parks a hair off the kink, so the zero-set cutoff must absorb
  // that offset; 1e-7 is far above the solver's landing error and far below
  // every genuine value of f.
  std::vector<OrthoCertificate> certs = check_l1_characterization(f, res.g0, G, 1e-7, 1e-9);
  REQUIRE(certs.size() == 1);
  CHECK(certs[0].lhs <= certs[0].rhs + 1e-9);
}

TEST_CASE("a member of the span projects onto itself") {
  gen::Rng r(17);
  DiscreteMeasure mu = gen::random_measure(r);
  SmoothSpace h = SmoothSpace::hilbert(Field::complex, 2);
  BochnerFunction g1 = gen::random_function(r, mu, h);
  SubspaceBasis G({g1});
  BochnerFunction f = combine(cplx(2.0, -1.0), g1, cplx(0.0, 0.0), g1);
  ApproxResult res = best_approx(f, G, 2.0, 1e-9);
  CHECK(std::abs(res.coefficients[0] - cplx(2.0, -1.0)) <= 1e-6);
  CHECK(res.residual_norm <= 1e-7 * lp_norm(f, 2.0));
  CHECK(res.f_in_span);
}

TEST_CASE("certified p=3 solutions resist random coefficient perturbations") {
  gen::Rng r(23);
  DiscreteMeasure mu = gen::random_measure(r);
  SmoothSpace sp = SmoothSpace::lp(Field::real, 2, 3.0);
  BochnerFunction f = gen::random_function(r, mu, sp);
  BochnerFunction g1 = gen::random_function(r, mu, sp);
  BochnerFunction g2 = gen::random_function(r, mu, sp);
  SubspaceBasis G({g1, g2});
  double tol = 1e-6;
  ApproxResult res = best_approx(f, G, 3.0, tol);

  double scale = std::pow(lp_norm(combine(cplx(1.0, 0.0), f, cplx(-1.0, 0.0), res.g0), 3.0), 2.0);
  std::vector<double> marks = check_lp_characterization(f, res.g0, G, 3.0, 0.0, tol);
  REQUIRE(marks.size() == 2);
  for (std::size_t i = 0; i < marks.size(); ++i)
    CHECK(marks[i] <= tol * scale * lp_norm(G.element(i), 3.0) + 1e-12);

  for (int t = 0; t < 100; ++t) {
    cplx c0 = res.coefficients[0] + cplx(r.uniform(-10.0 * tol, 10.0 * tol), 0.0);
    cplx c1 = res.coefficients[1] + cplx(r.uniform(-10.0 * tol, 10.0 * tol), 0.0);
    BochnerFunction cand = combine(c0, g1, c1, g2);
    double val = lp_norm(combine(cplx(1.0, 0.0), f, cplx(-1.0, 0.0), cand), 3.0);
    CHECK(val >= res.residual_norm - tol);
  }
}

TEST_CASE("best_approx validates its inputs") {
  DiscreteMeasure mu = counting_measure(2);
  DiscreteMeasure other = counting_measure(3);
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 1);
  BochnerFunction f(mu, h, {{cplx(1.0, 0.0)}, {cplx(2.0, 0.0)}});
  SubspaceBasis G({constant_one(other, h)});
  CHECK_THROWS_AS(best_approx(f, G, 2.0, 1e-9), std::invalid_argument);
  SubspaceBasis Gok({constant_one(mu, h)});
  CHECK_THROWS_AS(best_approx(f, Gok, 0.9, 1e-9), std::invalid_argument);
}

TEST_CASE("subspace orthogonality reduces to the pointwise test") {
  gen::Rng r(29);
  SmoothSpace h = SmoothSpace::hilbert(Field::complex, 4);
  DiscreteMeasure mu = counting_measure(2);
  std::vector<Vec> fv{Vec{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)},
                      Vec{cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}};
  BochnerFunction f(mu, h, fv);
  // y touches neither f(1) nor f(2): both sides must say orthogonal
  std::vector<Vec> good{Vec{cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  LightReport ok = light_check(f, good, 2.0, 0.0, 1e-9);
  CHECK(ok.subspace_verdict == Verdict::orthogonal);
  CHECK(ok.pointwise_failures.empty());
  CHECK(!ok.borderline);

  // y overlaps f at the first atom only
  std::vector<Vec> bad{Vec{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.5, 0.0), cplx(0.0, 0.0)}};
  LightReport no = light_check(f, bad, 2.0, 0.0, 1e-9);
  CHECK(no.subspace_verdict == Verdict::not_orthogonal);
  REQUIRE(no.pointwise_failures.size() == 1);
  CHECK(no.pointwise_failures[0] == 0);
  CHECK(no.violation.has_value());
  CHECK(no.violation_certificate.has_value());
}

TEST_CASE("zero-weight atoms do not decide subspace orthogonality") {
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 3);
  DiscreteMeasure mu({Atom{{1}, {}}, Atom{{2}, {}}}, {1.0, 0.0});
  std::vector<Vec> fv{Vec{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)},
                      Vec{cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  BochnerFunction f(mu, h, fv);
  // y is parallel to f at the null atom and orthogonal at the loaded one
  std::vector<Vec> y{Vec{cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  LightReport rep = light_check(f, y, 2.0, 0.0, 1e-9);
  CHECK(rep.subspace_verdict == Verdict::orthogonal);
  CHECK(rep.pointwise_failures.empty());
}

TEST_CASE("light check validates exponent and basis") {
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 2);
  DiscreteMeasure mu = counting_measure(2);
  BochnerFunction f = constant_one(mu, h);
  std::vector<Vec> y{Vec{cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  CHECK_THROWS_AS(light_check(f, y, 1.0, 0.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(light_check(f, {}, 2.0, 0.0, 1e-9), std::invalid_argument);
  std::vector<Vec> dep{Vec{cplx(1.0, 0.0), cplx(0.0, 0.0)}, Vec{cplx(2.0, 0.0), cplx(0.0, 0.0)}};
  CHECK_THROWS_AS(light_check(f, dep, 2.0, 0.0, 1e-9), degenerate_basis);
}
