#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bjlb/measure.hpp"
#include "bjlb/space.hpp"

namespace bjlb {

// A function from the atoms of a discrete measure into a smooth space,
// stored as one value vector per atom.  Immutable after construction;
// the constructor validates every value against the space.
class BochnerFunction {
 public:
  BochnerFunction(DiscreteMeasure measure, SmoothSpace space, std::vector<Vec> values);

  const DiscreteMeasure& measure() const { return measure_; }
  const SmoothSpace& space() const { return space_; }
  const std::vector<Vec>& values() const { return values_; }
  const Vec& value(std::size_t s) const { return values_[s]; }
  std::size_t size() const { return values_.size(); }

  bool same_domain(const BochnerFunction& other) const;

 private:
  DiscreteMeasure measure_;
  SmoothSpace space_;
  std::vector<Vec> values_;
};

BochnerFunction zero_function(const DiscreteMeasure& mu, const SmoothSpace& sp);

// Scalar indicator function of the atoms satisfying `inside`.
BochnerFunction indicator(const DiscreteMeasure& mu, Field field,
                          const std::function<bool(const Atom&)>& inside);

// Indicator of a label set for measures with one-dimensional labels
// (counting measures).
BochnerFunction indicator_labels(const DiscreteMeasure& mu, Field field,
                                 const std::vector<std::int64_t>& labels);

// Indicator of [lo, hi] applied to atom coordinates; atoms without a
// coordinate are outside.
BochnerFunction indicator_coord(const DiscreteMeasure& mu, Field field, double lo, double hi);

// (sum_s w_s ||f(s)||^p)^(1/p).
double lp_norm(const BochnerFunction& f, double p);

// Atom indices with ||f(s)|| <= eps_zero.
std::vector<std::size_t> zero_set(const BochnerFunction& f, double eps_zero);

// s -> fscalar(s) x, the concrete face of the tensor fscalar (x) x in sp.
BochnerFunction elementary_tensor(const BochnerFunction& fscalar, const Vec& x,
                                  const SmoothSpace& sp);

// (s,t) -> f1(s) f2(t) on product_measure(f1.measure, f2.measure), both scalar.
BochnerFunction scalar_product_function(const BochnerFunction& f1, const BochnerFunction& f2);

// Pointwise linear combination a f + b g on a shared domain.
BochnerFunction combine(const cplx& a, const BochnerFunction& f, const cplx& b,
                        const BochnerFunction& g);

}  // namespace bjlb
