#include "bjlb/bochner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "bjlb/kernels.hpp"

namespace bjlb {

BochnerFunction::BochnerFunction(DiscreteMeasure measure, SmoothSpace space,
                                 std::vector<Vec> values)
    : measure_(std::move(measure)), space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != measure_.size())
    throw std::invalid_argument("value count must match atom count");
  for (const Vec& v : values_) check_vector(space_, v);
}

bool BochnerFunction::same_domain(const BochnerFunction& other) const {
  return measure_ == other.measure_ && space_ == other.space_;
}

BochnerFunction zero_function(const DiscreteMeasure& mu, const SmoothSpace& sp) {
  std::vector<Vec> vals(mu.size(), Vec(static_cast<std::size_t>(sp.dim()), cplx(0.0, 0.0)));
  return BochnerFunction(mu, sp, std::move(vals));
}

BochnerFunction indicator(const DiscreteMeasure& mu, Field field,
                          const std::function<bool(const Atom&)>& inside) {
  std::vector<Vec> vals(mu.size());
  for (std::size_t s = 0; s < mu.size(); ++s)
    vals[s] = {cplx(inside(mu.atom(s)) ? 1.0 : 0.0, 0.0)};
  return BochnerFunction(mu, SmoothSpace::scalar(field), std::move(vals));
}

BochnerFunction indicator_labels(const DiscreteMeasure& mu, Field field,
                                 const std::vector<std::int64_t>& labels) {
  return indicator(mu, field, [&labels](const Atom& a) {
    return a.label.size() == 1 &&
           std::find(labels.begin(), labels.end(), a.label[0]) != labels.end();
  });
}

BochnerFunction indicator_coord(const DiscreteMeasure& mu, Field field, double lo, double hi) {
  return indicator(mu, field, [lo, hi](const Atom& a) {
    return a.coord.has_value() && lo <= *a.coord && *a.coord <= hi;
  });
}

double lp_norm(const BochnerFunction& f, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("lp_norm needs 1 <= p < inf");
  std::vector<double> norms(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) norms[s] = norm(f.space(), f.value(s));
  double acc = kernels::weighted_pow_sum(f.measure().weights(), norms, p);
  return std::pow(acc, 1.0 / p);
}

std::vector<std::size_t> zero_set(const BochnerFunction& f, double eps_zero) {
  if (eps_zero < 0.0) throw std::invalid_argument("eps_zero must be nonnegative");
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < f.size(); ++s)
    if (norm(f.space(), f.value(s)) <= eps_zero) out.push_back(s);
  return out;
}

BochnerFunction elementary_tensor(const BochnerFunction& fscalar, const Vec& x,
                                  const SmoothSpace& sp) {
  if (fscalar.space().kind() != SpaceKind::scalar)
    throw std::invalid_argument("elementary_tensor needs a scalar left factor");
  if (fscalar.space().field() != sp.field())
    throw std::invalid_argument("tensor factors must share the scalar field");
  check_vector(sp, x);
  std::vector<Vec> vals(fscalar.size());
  for (std::size_t s = 0; s < fscalar.size(); ++s) {
    cplx c = fscalar.value(s)[0];
    Vec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = c * x[i];
    vals[s] = std::move(v);
  }
  return BochnerFunction(fscalar.measure(), sp, std::move(vals));
}

BochnerFunction scalar_product_function(const BochnerFunction& f1, const BochnerFunction& f2) {
  if (f1.space().kind() != SpaceKind::scalar || f2.space().kind() != SpaceKind::scalar)
    throw std::invalid_argument("scalar_product_function needs scalar factors");
  if (f1.space().field() != f2.space().field())
    throw std::invalid_argument("factors must share the scalar field");
  DiscreteMeasure prod = product_measure(f1.measure(), f2.measure());
  // product_measure enumerates (s,t) with t fastest; mirror that order here.
  std::vector<Vec> vals;
  vals.reserve(prod.size());
  for (std::size_t s = 0; s < f1.size(); ++s)
    for (std::size_t t = 0; t < f2.size(); ++t)
      vals.push_back({f1.value(s)[0] * f2.value(t)[0]});
  return BochnerFunction(std::move(prod), f1.space(), std::move(vals));
}

BochnerFunction combine(const cplx& a, const BochnerFunction& f, const cplx& b,
                        const BochnerFunction& g) {
  if (!f.same_domain(g)) throw std::invalid_argument("combine needs a shared measure and space");
  std::vector<Vec> vals(f.size());
  for (std::size_t s = 0; s < f.size(); ++s) {
    Vec v(f.value(s).size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * f.value(s)[i] + b * g.value(s)[i];
    vals[s] = std::move(v);
  }
  return BochnerFunction(f.measure(), f.space(), std::move(vals));
}

}  // namespace bjlb
