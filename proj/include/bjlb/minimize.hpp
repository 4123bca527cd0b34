#pragma once

#include <functional>
#include <vector>

namespace bjlb::minimize {

using Fn1 = std::function<double(double)>;
using FnN = std::function<double(const std::vector<double>&)>;

// Golden-section search for a minimum of a unimodal f on [a, b].
// Stops when the bracket is shorter than xtol; returns the midpoint.
double golden(const Fn1& f, double a, double b, double xtol);

// Minimizes a convex f over the line through x0: brackets the minimum by
// doubling steps of initial size h in the downhill direction, then refines
// with golden-section.  Works without derivatives, so kinks (p = 1) are fine.
double line_convex(const Fn1& f, double x0, double h, double xtol);

struct CoordResult {
  std::vector<double> x;
  double value;
  int sweeps;
};

// Cyclic coordinate descent with golden-section line searches and
// per-coordinate shrinking brackets.  Runs until three consecutive full
// sweeps improve by less than ftol, or max_sweeps is hit.
CoordResult coordinate(const FnN& f, std::vector<double> x0, double span, double xtol,
                       double ftol, int max_sweeps);

// Compass (pattern) search polish: axis moves with a halving step.
// Useful after coordinate descent on nonsmooth objectives, where a
// line-per-coordinate minimizer can stall off-axis.
double compass_polish(const FnN& f, std::vector<double>& x, double step0, double step_min);

}  // namespace bjlb::minimize
