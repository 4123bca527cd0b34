#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bjlb/scalar.hpp"

namespace bjlb {

/// Atom identifier. Leaf atoms hold a single id; atoms of a product measure
/// concatenate the ids of their factors. Interval atoms additionally carry
/// the midpoint coordinate of their cell.
struct Atom {
  std::vector<std::int64_t> label;
  std::optional<double> coord;

  bool operator==(const Atom& o) const { return label == o.label; }
};

/// Finite positive measure: a list of atoms with nonnegative weights and
/// strictly positive total mass. Immutable after construction.
class DiscreteMeasure {
public:
  DiscreteMeasure(std::vector<Atom> atoms, std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const;

  bool operator==(const DiscreteMeasure& o) const {
    return atoms_ == o.atoms_ && weights_ == o.weights_;
  }

private:
  std::vector<Atom> atoms_;
  std::vector<double> weights_;
};

/// n atoms labeled 1..n, each of weight 1.
DiscreteMeasure counting_measure(std::size_t n);

/// Midpoint rule on [a,b] with n cells: atom k sits at a+(k+1/2)(b-a)/n with
/// weight (b-a)/n. Indicators of subintervals whose endpoints are cell
/// boundaries integrate exactly.
DiscreteMeasure interval_quadrature(double a, double b, std::size_t n);

/// Atoms are label concatenations, weight(s,t) = weight(s)*weight(t).
DiscreteMeasure product_measure(const DiscreteMeasure& m1, const DiscreteMeasure& m2);

/// Weighted sum over atoms; values length must equal the atom count.
cplx integrate(const DiscreteMeasure& m, std::span<const cplx> values);
double integrate(const DiscreteMeasure& m, std::span<const double> values);

} // namespace bjlb
