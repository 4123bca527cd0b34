#include "bjlb/minimize.hpp"

#include <cmath>
#include <utility>

namespace bjlb::minimize {

namespace {
constexpr double kInvPhi = 0.6180339887498949;  // 1/phi
}

double golden(const Fn1& f, double a, double b, double xtol) {
  if (b < a) std::swap(a, b);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double line_convex(const Fn1& f, double x0, double h, double xtol) {
  double f0 = f(x0);
  double fl = f(x0 - h);
  double fr = f(x0 + h);
  if (f0 <= fl && f0 <= fr) return golden(f, x0 - h, x0 + h, xtol);
  // Walk downhill with doubling steps until the value turns back up; the
  // objective is convex, so the previous two points bracket the minimum.
  double dir = fr < fl ? 1.0 : -1.0;
  double prev_x = x0;
  double prev_f = f0;
  double cur_x = x0 + dir * h;
  double cur_f = dir > 0.0 ? fr : fl;
  double step = h;
  for (int i = 0; i < 80; ++i) {
    step *= 2.0;
    double next_x = cur_x + dir * step;
    double next_f = f(next_x);
    if (next_f >= cur_f) return golden(f, prev_x, next_x, xtol);
    prev_x = cur_x;
    prev_f = cur_f;
    cur_x = next_x;
    cur_f = next_f;
  }
  (void)prev_f;
  return cur_x;  // unbounded descent; caller's domain bound makes this unreachable
}

CoordResult coordinate(const FnN& f, std::vector<double> x0, double span, double xtol,
                       double ftol, int max_sweeps) {
  const std::size_t n = x0.size();
  std::vector<double> h(n, span);
  double val = f(x0);
  int stalled = 0;
  int sweep = 0;
  for (; sweep < max_sweeps && stalled < 3; ++sweep) {
    double before = val;
    for (std::size_t i = 0; i < n; ++i) {
      auto line = [&](double t) {
        std::vector<double> y = x0;
        y[i] += t;
        return f(y);
      };
      double t = line_convex(line, 0.0, h[i], xtol);
      double cand = line(t);
      if (cand < val) {
        x0[i] += t;
        val = cand;
      }
      // Shrink the bracket toward the recent move size, never below xtol.
      double moved = std::abs(t);
      h[i] = std::max(xtol, std::max(4.0 * moved, 0.25 * h[i]));
    }
    if (before - val < ftol)
      ++stalled;
    else
      stalled = 0;
  }
  return {std::move(x0), val, sweep};
}

double compass_polish(const FnN& f, std::vector<double>& x, double step0, double step_min) {
  const std::size_t n = x.size();
  double val = f(x);
  double step = step0;
  while (step >= step_min) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[i] += dir * step;
        double cand = f(y);
        if (cand < val) {
          x = std::move(y);
          val = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return val;
}

}  // namespace bjlb::minimize
