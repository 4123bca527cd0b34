#include "bjlb/repro.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bjlb/ortho.hpp"

namespace bjlb::repro {

namespace {

void add_check(Report& rep, const std::string& name, double got, double want, double tol) {
  rep.checks.push_back({name, got, want, std::abs(got - want) <= tol});
}

void add_verdict(Report& rep, const std::string& name, Verdict got, Verdict want) {
  rep.verdicts.push_back({name, verdict_name(got), verdict_name(want), got == want});
}

void finish(Report& rep) {
  rep.pass = true;
  for (const Check& c : rep.checks) rep.pass = rep.pass && c.pass;
  for (const VerdictLine& v : rep.verdicts) rep.pass = rep.pass && v.pass;
}

double real_integral(const DiscreteMeasure& mu, const BochnerFunction& f,
                     const BochnerFunction& g) {
  // integral of the pointwise product |f g| for indicator data
  std::vector<double> vals(mu.size());
  for (std::size_t s = 0; s < mu.size(); ++s)
    vals[s] = std::abs(f.value(s)[0]) * std::abs(g.value(s)[0]);
  return integrate(mu, vals);
}

}  // namespace

Report tensor_hilbert(double tol) {
  Report rep;
  rep.example = "tensor-hilbert";

  DiscreteMeasure mu = counting_measure(5);
  Field F = Field::complex;
  BochnerFunction chiA = indicator_labels(mu, F, {1, 2, 3});
  BochnerFunction chiB = indicator_labels(mu, F, {2, 3, 5});
  BochnerFunction chiAc = indicator_labels(mu, F, {4, 5});

  add_check(rep, "mu(A and B)", real_integral(mu, chiA, chiB), 2.0, tol);
  add_check(rep, "mu(Ac and B)", real_integral(mu, chiAc, chiB), 1.0, tol);

  OrthoCertificate scal = bj_scalar_l1(chiA, chiB, 0.0, tol);
  add_check(rep, "scalar L1 lhs", scal.lhs, 2.0, tol);
  add_check(rep, "scalar L1 rhs", scal.rhs, 1.0, tol);
  add_verdict(rep, "chi_A vs chi_B", scal.implied, Verdict::not_orthogonal);

  SmoothSpace X = SmoothSpace::hilbert(F, 5);
  Vec x = {cplx(0, 1), cplx(0, -1), 0.0, 0.0, 0.0};
  Vec y = {cplx(0, 1), 0.0, cplx(0, -1), 0.0, 0.0};
  cplx inner(0.0, 0.0);  // <y, x>
  for (std::size_t i = 0; i < x.size(); ++i) inner += y[i] * std::conj(x[i]);
  add_check(rep, "<y,x> real part", inner.real(), 1.0, tol);
  add_check(rep, "<y,x> imag part", inner.imag(), 0.0, tol);
  add_verdict(rep, "x vs y",
              std::abs(inner) <= tol ? Verdict::orthogonal : Verdict::not_orthogonal,
              Verdict::not_orthogonal);

  BochnerFunction h1 = elementary_tensor(chiA, x, X);
  BochnerFunction h2 = elementary_tensor(chiB, y, X);
  OrthoCertificate vec = bj_l1_criterion(h1, h2, 0.0, tol);
  double root2 = std::sqrt(2.0);
  add_check(rep, "vector L1 lhs", vec.lhs, root2, tol);
  add_check(rep, "vector L1 rhs", vec.rhs, root2, tol);
  // The sides tie exactly, so the certificate flags the borderline band and
  // the inequality lhs <= rhs resolves it as orthogonal.
  add_verdict(rep, "h1 vs h2", vec.implied, Verdict::orthogonal);
  add_verdict(rep, "h1 vs h2 band", vec.verdict, Verdict::borderline);

  finish(rep);
  return rep;
}

Report tensor_l1l1(double tol) {
  Report rep;
  rep.example = "tensor-l1l1";

  DiscreteMeasure mu = counting_measure(5);
  DiscreteMeasure nu = interval_quadrature(-2.0, 2.0, 4);
  Field F = Field::complex;
  BochnerFunction chiA = indicator_labels(mu, F, {1, 2, 3});
  BochnerFunction chiB = indicator_labels(mu, F, {2, 3, 5});
  BochnerFunction chiC = indicator_coord(nu, F, -1.0, 2.0);
  BochnerFunction chiD = indicator_coord(nu, F, -2.0, 1.0);

  {
    BochnerFunction chiCD = indicator(nu, F, [](const Atom& a) {
      return a.coord && -1.0 <= *a.coord && *a.coord <= 1.0;
    });
    BochnerFunction chiCcD = indicator(nu, F, [](const Atom& a) {
      return a.coord && -2.0 <= *a.coord && *a.coord < -1.0;
    });
    std::vector<double> cd(nu.size()), ccd(nu.size());
    for (std::size_t s = 0; s < nu.size(); ++s) {
      cd[s] = chiCD.value(s)[0].real();
      ccd[s] = chiCcD.value(s)[0].real();
    }
    add_check(rep, "nu(C and D)", integrate(nu, cd), 2.0, tol);
    add_check(rep, "nu(Cc and D)", integrate(nu, ccd), 1.0, tol);
  }

  OrthoCertificate sAB = bj_scalar_l1(chiA, chiB, 0.0, tol);
  add_verdict(rep, "chi_A vs chi_B", sAB.implied, Verdict::not_orthogonal);
  OrthoCertificate sCD = bj_scalar_l1(chiC, chiD, 0.0, tol);
  add_verdict(rep, "chi_C vs chi_D", sCD.implied, Verdict::not_orthogonal);

  BochnerFunction fAC = scalar_product_function(chiA, chiC);
  BochnerFunction gBD = scalar_product_function(chiB, chiD);
  OrthoCertificate prod = bj_scalar_l1(fAC, gBD, 0.0, tol);
  add_check(rep, "product L1 lhs", prod.lhs, 4.0, tol);
  add_check(rep, "product L1 rhs", prod.rhs, 5.0, tol);
  add_verdict(rep, "chiA.chiC vs chiB.chiD", prod.verdict, Verdict::orthogonal);

  finish(rep);
  return rep;
}

Report run(const std::string& example_id, double tol) {
  if (example_id == "tensor-hilbert") return tensor_hilbert(tol);
  if (example_id == "tensor-l1l1") return tensor_l1l1(tol);
  throw std::invalid_argument("unknown example id " + example_id);
}

std::string Report::render() const {
  std::ostringstream os;
  os.precision(17);
  os << "example " << example << "\n";
  for (const Check& c : checks)
    os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name << ": got " << c.got
       << " want " << c.want << "\n";
  for (const VerdictLine& v : verdicts)
    os << "  " << (v.pass ? "ok  " : "FAIL") << " " << v.name << ": " << v.got << "\n";
  os << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

io::json Report::to_json() const {
  io::json jc = io::json::array();
  for (const Check& c : checks)
    jc.push_back({{"name", c.name}, {"got", c.got}, {"want", c.want}, {"pass", c.pass}});
  io::json jv = io::json::array();
  for (const VerdictLine& v : verdicts)
    jv.push_back({{"name", v.name}, {"got", v.got}, {"want", v.want}, {"pass", v.pass}});
  return io::json{
      {"example", example}, {"checks", jc}, {"verdicts", jv}, {"pass", pass}};
}

}  // namespace bjlb::repro
