#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bjlb/measure.hpp"

using namespace bjlb;

TEST_CASE("counting measure lists atoms 1..n with unit weight") {
  DiscreteMeasure mu = counting_measure(5);
  REQUIRE(mu.size() == 5);
  double total = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(mu.weight(i) == 1.0);
    REQUIRE(mu.atom(i).label.size() == 1);
    CHECK(mu.atom(i).label[0] == static_cast<std::int64_t>(i + 1));
    CHECK(!mu.atom(i).coord.has_value());
    total += mu.weight(i);
  }
  CHECK(total == 5.0);
}

TEST_CASE("measure construction rejects bad input") {
  CHECK_THROWS_AS(DiscreteMeasure({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({Atom{{1}, {}}}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({Atom{{1}, {}}}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({Atom{{1}, {}}}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({Atom{{1}, {}}, Atom{{1}, {}}}, {1.0, 1.0}),
                  std::invalid_argument);
  // an individual zero weight among positive ones is a legal null set
  DiscreteMeasure mu({Atom{{1}, {}}, Atom{{2}, {}}}, {0.0, 1.0});
  CHECK(mu.weight(0) == 0.0);
}

TEST_CASE("four-cell quadrature of [-2,2] is exact") {
  DiscreteMeasure nu = interval_quadrature(-2.0, 2.0, 4);
  REQUIRE(nu.size() == 4);
  const double mid[] = {-1.5, -0.5, 0.5, 1.5};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(nu.weight(k) == 1.0);  // (b-a)/n = 1 exactly
    REQUIRE(nu.atom(k).coord.has_value());
    CHECK(*nu.atom(k).coord == mid[k]);
  }
}

TEST_CASE("fine quadrature integrates subinterval indicators to 1e-12") {
  DiscreteMeasure nu = interval_quadrature(-2.0, 2.0, 400);
  REQUIRE(nu.size() == 400);
  double total = 0.0;
  double inner = 0.0;  // mass of [-1,1]
  for (std::size_t k = 0; k < nu.size(); ++k) {
    total += nu.weight(k);
    double c = *nu.atom(k).coord;
    if (c >= -1.0 && c <= 1.0) inner += nu.weight(k);
  }
  // each weight is fl(0.01); 400 of them accumulate at most ~1e-13 of drift
  CHECK(std::abs(total - 4.0) <= 1e-12);
  CHECK(std::abs(inner - 2.0) <= 1e-12);
}

TEST_CASE("product measure multiplies weights in row-major order") {
  DiscreteMeasure m1({Atom{{1}, {}}, Atom{{2}, {}}}, {2.0, 3.0});
  DiscreteMeasure m2({Atom{{10}, {}}, Atom{{11}, {}}, Atom{{12}, {}}}, {0.5, 0.25, 0.125});
  DiscreteMeasure prod = product_measure(m1, m2);
  REQUIRE(prod.size() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t k = i * 3 + j;
      CHECK(prod.weight(k) == m1.weight(i) * m2.weight(j));
      REQUIRE(prod.atom(k).label.size() == 2);
      CHECK(prod.atom(k).label[0] == m1.atom(i).label[0]);
      CHECK(prod.atom(k).label[1] == m2.atom(j).label[0]);
    }
}

TEST_CASE("integrate is the weighted sum") {
  DiscreteMeasure mu = counting_measure(3);
  std::vector<double> vals{1.0, 2.0, 3.0};
  CHECK(integrate(mu, vals) == 6.0);
  std::vector<cplx> cvals{cplx(1.0, 1.0), cplx(0.0, -2.0), cplx(2.0, 0.0)};
  cplx z = integrate(mu, cvals);
  CHECK(z.real() == 3.0);
  CHECK(z.imag() == -1.0);
  std::vector<double> wrong{1.0};
  CHECK_THROWS_AS(integrate(mu, wrong), std::invalid_argument);
}
