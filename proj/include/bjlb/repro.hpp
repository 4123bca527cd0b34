#pragma once

#include <string>
#include <vector>

#include "bjlb/json_io.hpp"

namespace bjlb::repro {

struct Check {
  std::string name;
  double got = 0.0;
  double want = 0.0;
  bool pass = false;
};

struct VerdictLine {
  std::string name;
  std::string got;
  std::string want;
  bool pass = false;
};

struct Report {
  std::string example;
  std::vector<Check> checks;
  std::vector<VerdictLine> verdicts;
  bool pass = false;

  std::string render() const;  // fixed-format text, identical bytes per run
  io::json to_json() const;
};

// First counterexample: indicator pair fails the scalar L1 test, the
// Hilbert pair fails the inner-product test, yet their tensors are
// orthogonal in L1 of the counting measure with values in C^5; the
// criterion sides land exactly on sqrt(2) = sqrt(2).
Report tensor_hilbert(double tol = 1e-9);

// Second counterexample: both indicator pairs fail the scalar L1 test on
// their own measures, yet the product functions are orthogonal in L1 of the
// product measure, with sides 4 <= 5.
Report tensor_l1l1(double tol = 1e-9);

Report run(const std::string& example_id, double tol = 1e-9);

}  // namespace bjlb::repro
