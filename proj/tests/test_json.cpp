#include <doctest.h>

#include "bjlb/approx.hpp"
#include "bjlb/generators.hpp"
#include "bjlb/json_io.hpp"
#include "bjlb/ortho.hpp"

using namespace bjlb;
using bjlb::io::json;

TEST_CASE("measures round-trip through JSON") {
  DiscreteMeasure mu = counting_measure(4);
  CHECK(io::measure_from_json(io::to_json(mu)) == mu);
  DiscreteMeasure nu = interval_quadrature(-2.0, 2.0, 4);
  DiscreteMeasure nu2 = io::measure_from_json(io::to_json(nu));
  CHECK(nu2 == nu);
  REQUIRE(nu2.atom(0).coord.has_value());
  CHECK(*nu2.atom(0).coord == -1.5);
  DiscreteMeasure prod = product_measure(mu, nu);
  CHECK(io::measure_from_json(io::to_json(prod)) == prod);
}

TEST_CASE("spaces round-trip through JSON") {
  for (const SmoothSpace& sp : {SmoothSpace::lp(Field::real, 3, 2.5), SmoothSpace::hilbert(Field::complex, 4),
                                SmoothSpace::scalar(Field::real)}) {
    CHECK(io::space_from_json(io::to_json(sp)) == sp);
  }
  json bad{{"field", "quaternion"}, {"kind", "hilbert"}, {"dim", 2}};
  CHECK_THROWS_AS(io::space_from_json(bad), std::invalid_argument);
  json high{{"field", "real"}, {"kind", {{"lp", 10.0}}}, {"dim", 2}};
  CHECK_THROWS_AS(io::space_from_json(high), std::invalid_argument);
  CHECK_NOTHROW(io::space_from_json(high, 12.0));
}

TEST_CASE("functions round-trip through JSON in both fields") {
  gen::Rng r(61);
  DiscreteMeasure mu = gen::random_measure(r);
  for (Field field : {Field::real, Field::complex}) {
    SmoothSpace sp = gen::random_smooth_space(r, field);
    BochnerFunction f = gen::random_function(r, mu, sp);
    BochnerFunction back = io::bochner_from_json(io::to_json(f));
    REQUIRE(back.size() == f.size());
    CHECK(back.measure() == f.measure());
    CHECK(back.space() == f.space());
    for (std::size_t s = 0; s < f.size(); ++s)
      for (std::size_t d = 0; d < f.value(s).size(); ++d)
        CHECK(back.value(s)[d] == f.value(s)[d]);
  }
}

TEST_CASE("malformed function JSON is rejected") {
  DiscreteMeasure mu = counting_measure(2);
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 2);
  BochnerFunction f(mu, h, {{cplx(1.0, 0.0), cplx(0.0, 0.0)}, {cplx(0.0, 0.0), cplx(1.0, 0.0)}});
  json j = io::to_json(f);
  json missing = j;
  missing.erase("values");
  CHECK_THROWS(io::bochner_from_json(missing));
  json short_vals = j;
  short_vals["values"].erase(1);
  CHECK_THROWS_AS(io::bochner_from_json(short_vals), std::invalid_argument);
}

TEST_CASE("certificates serialize their fields") {
  DiscreteMeasure mu = counting_measure(5);
  BochnerFunction chiA = indicator_labels(mu, Field::real, {1, 2, 3});
  BochnerFunction chiB = indicator_labels(mu, Field::real, {2, 3, 5});
  OrthoCertificate c = bj_scalar_l1(chiA, chiB, 0.0, 1e-9);
  json j = io::to_json(c);
  CHECK(j.at("verdict") == "not-orthogonal");
  CHECK(j.at("implied") == "not-orthogonal");
  CHECK(j.at("lhs").get<double>() == 2.0);
  CHECK(j.at("rhs").get<double>() == 1.0);
  CHECK(j.at("tolerance").get<double>() == 1e-9);
  CHECK(j.contains("criterion"));

  OrthoCertificate d = bj_direct(chiA, chiB, 1.0, 1e-9);
  json jd = io::to_json(d);
  if (d.witness) CHECK(jd.at("witness").is_array());
}

TEST_CASE("approximation results serialize") {
  DiscreteMeasure mu = counting_measure(2);
  SmoothSpace h = SmoothSpace::hilbert(Field::real, 1);
  BochnerFunction f(mu, h, {{cplx(3.0, 0.0)}, {cplx(1.0, 0.0)}});
  std::vector<Vec> ones(2, Vec{cplx(1.0, 0.0)});
  SubspaceBasis G({BochnerFunction(mu, h, ones)});
  ApproxResult res = best_approx(f, G, 2.0, 1e-9);
  json j = io::to_json(res);
  CHECK(j.at("coefficients").is_array());
  CHECK(j.at("residual_norm").get<double>() == doctest::Approx(res.residual_norm));
  CHECK(j.contains("g0"));
  CHECK(j.contains("optimality_residuals"));
  CHECK(j.contains("f_in_span"));

  std::vector<Vec> y{Vec{cplx(1.0, 0.0)}};
  BochnerFunction f2(mu, h, {{cplx(1.0, 0.0)}, {cplx(0.0, 0.0)}});
  LightReport rep = light_check(f2, y, 2.0, 0.0, 1e-9);
  json jl = io::to_json(rep);
  CHECK(jl.contains("subspace_verdict"));
  CHECK(jl.contains("pointwise_failures"));
}
