#include "bjlb/measure.hpp"

#include <algorithm>
#include <stdexcept>

#include "bjlb/kernels.hpp"

namespace bjlb {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty() || atoms_.size() != weights_.size())
    throw std::invalid_argument("measure needs equally many atoms and weights, at least one");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("atom weights must be finite and nonnegative");
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::invalid_argument("total mass must be finite and positive");
  std::vector<const Atom*> sorted;
  sorted.reserve(atoms_.size());
  for (const Atom& a : atoms_) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(),
            [](const Atom* x, const Atom* y) { return x->label < y->label; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1]->label == sorted[i]->label)
      throw std::invalid_argument("atom labels must be pairwise distinct");
}

double DiscreteMeasure::total_mass() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return total;
}

DiscreteMeasure counting_measure(std::size_t n) {
  if (n == 0) throw std::invalid_argument("counting measure needs at least one atom");
  std::vector<Atom> atoms(n);
  for (std::size_t k = 0; k < n; ++k) atoms[k].label = {static_cast<std::int64_t>(k + 1)};
  return DiscreteMeasure(std::move(atoms), std::vector<double>(n, 1.0));
}

DiscreteMeasure interval_quadrature(double a, double b, std::size_t n) {
  if (!(a < b)) throw std::invalid_argument("interval quadrature needs a < b");
  if (n == 0) throw std::invalid_argument("interval quadrature needs at least one cell");
  double h = (b - a) / static_cast<double>(n);
  std::vector<Atom> atoms(n);
  for (std::size_t k = 0; k < n; ++k) {
    atoms[k].label = {static_cast<std::int64_t>(k)};
    atoms[k].coord = a + (static_cast<double>(k) + 0.5) * h;
  }
  return DiscreteMeasure(std::move(atoms), std::vector<double>(n, h));
}

DiscreteMeasure product_measure(const DiscreteMeasure& m1, const DiscreteMeasure& m2) {
  std::vector<Atom> atoms;
  std::vector<double> weights;
  atoms.reserve(m1.size() * m2.size());
  weights.reserve(m1.size() * m2.size());
  for (std::size_t i = 0; i < m1.size(); ++i) {
    for (std::size_t j = 0; j < m2.size(); ++j) {
      Atom a;
      a.label = m1.atom(i).label;
      a.label.insert(a.label.end(), m2.atom(j).label.begin(), m2.atom(j).label.end());
      atoms.push_back(std::move(a));
      weights.push_back(m1.weight(i) * m2.weight(j));
    }
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

cplx integrate(const DiscreteMeasure& m, std::span<const cplx> values) {
  if (values.size() != m.size())
    throw std::invalid_argument("integrate: values length must match atom count");
  return kernels::weighted_csum(m.weights(), values);
}

double integrate(const DiscreteMeasure& m, std::span<const double> values) {
  if (values.size() != m.size())
    throw std::invalid_argument("integrate: values length must match atom count");
  return kernels::weighted_sum(m.weights(), values);
}

} // namespace bjlb
