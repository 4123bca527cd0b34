// Gate runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "bjlb/repro.hpp"
#include "bjlb/suites.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

int g_failures = 0;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int idx, bool pass, const std::string& what) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", idx, what.c_str());
  if (!pass) ++g_failures;
}

std::string counts(const bjlb::suite::SuiteReport& rep, double secs) {
  return std::to_string(rep.trials) + " trials, " + std::to_string(rep.failures) +
         " failures, " + std::to_string(rep.excluded) + " excluded, " +
         std::to_string(secs) + " s";
}

}  // namespace

int main() {
  using bjlb::repro::Report;
  using bjlb::suite::RunConfig;
  using bjlb::suite::SuiteReport;

  {
    auto t0 = clock_type::now();
    Report rep = bjlb::repro::run("tensor-hilbert", 1e-9);
    double secs = since(t0);
    report(1, rep.pass && secs < 1.0,
           "counting-measure tensor example exact to 1e-9 (" + std::to_string(secs) + " s)");
    if (!rep.pass) std::fputs(rep.render().c_str(), stdout);
  }

  {
    auto t0 = clock_type::now();
    Report rep = bjlb::repro::run("tensor-l1l1", 1e-9);
    double secs = since(t0);
    report(2, rep.pass && secs < 1.0,
           "product-measure example gives 4 vs 5 exact to 1e-9 (" + std::to_string(secs) + " s)");
    if (!rep.pass) std::fputs(rep.render().c_str(), stdout);
  }

  {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.trials = 200;
    cfg.tol = 1e-6;
    cfg.p_list = {1.5, 2.0, 3.0};
    auto t0 = clock_type::now();
    SuiteReport rep = bjlb::suite::run_suite("thm-tensor-p", cfg);
    double secs = since(t0);
    double excl_rate = static_cast<double>(rep.excluded) / rep.trials;
    bool pass = rep.failures == 0 && excl_rate < 0.05 && secs < 60.0;
    report(3, pass, "tensor equivalence suite, " + counts(rep, secs) + ", exclusion rate " +
                        std::to_string(excl_rate));
  }

  {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.trials = 300;
    cfg.tol = 1e-6;
    auto t0 = clock_type::now();
    SuiteReport rep = bjlb::suite::run_suite("crit-vs-oracle", cfg);
    report(4, rep.failures == 0, "criterion/oracle/phase-derivative agreement, " +
                                    counts(rep, since(t0)));
  }

  {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.trials = 100;  // alternating modes: 50 closed-form, 50 perturbation
    cfg.tol = 1e-6;
    auto t0 = clock_type::now();
    SuiteReport rep = bjlb::suite::run_suite("approx", cfg);
    report(5, rep.failures == 0,
           "best approximation vs closed form and perturbations, " + counts(rep, since(t0)));
  }

  {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.trials = 100;
    cfg.tol = 1e-6;
    auto t0 = clock_type::now();
    SuiteReport rep = bjlb::suite::run_suite("light", cfg);
    report(6, rep.failures == 0, "subspace vs pointwise orthogonality, " + counts(rep, since(t0)));
  }

  {
    RunConfig cfg;
    cfg.seed = 1;
    cfg.trials = 200;  // per space kind
    cfg.tol = 1e-6;
    auto t0 = clock_type::now();
    SuiteReport rep = bjlb::suite::run_suite("duality-map", cfg);
    report(7, rep.failures == 0, "duality map identities and derivative checks, " +
                                     counts(rep, since(t0)));
  }

  if (g_failures > 0) {
    std::printf("%d criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
