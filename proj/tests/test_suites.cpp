#include <doctest.h>

#include "bjlb/repro.hpp"
#include "bjlb/suites.hpp"

using namespace bjlb;

TEST_CASE("suite reports are reproducible bytes") {
  suite::RunConfig cfg;
  cfg.seed = 42;
  cfg.trials = 8;
  suite::SuiteReport a = suite::run_suite("crit-vs-oracle", cfg);
  suite::SuiteReport b = suite::run_suite("crit-vs-oracle", cfg);
  CHECK(a.to_json_text() == b.to_json_text());
  CHECK(a.to_csv() == b.to_csv());
  suite::RunConfig other = cfg;
  other.seed = 43;
  CHECK(suite::run_suite("crit-vs-oracle", other).to_csv() != a.to_csv());
}

TEST_CASE("small runs of every suite pass") {
  for (const std::string& name : suite::suite_names()) {
    suite::RunConfig cfg;
    cfg.seed = 7;
    cfg.trials = 6;
    suite::SuiteReport rep = suite::run_suite(name, cfg);
    INFO(name, ": ", rep.failures, " failures of ", rep.trials);
    CHECK(rep.failures == 0);
    CHECK(rep.trials >= cfg.trials);
  }
}

TEST_CASE("csv output carries the documented columns") {
  suite::RunConfig cfg;
  cfg.trials = 2;
  suite::SuiteReport rep = suite::run_suite("light", cfg);
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("suite,trial,p,dim,atoms,verdict_criterion,verdict_oracle,lhs,rhs,margin\n",
                  0) == 0);
  CHECK(csv.find("light,0,") != std::string::npos);
}

TEST_CASE("suite selection and configs are validated") {
  suite::RunConfig cfg;
  CHECK_THROWS_AS(suite::run_suite("no-such-suite", cfg), std::invalid_argument);
  suite::RunConfig bad = cfg;
  bad.trials = 0;
  CHECK_THROWS_AS(suite::run_suite("light", bad), std::invalid_argument);
  suite::RunConfig badp = cfg;
  badp.p_list = {1.0};
  CHECK_THROWS_AS(suite::run_suite("thm-tensor-p", badp), std::invalid_argument);
}

TEST_CASE("the p list override reaches the rows") {
  suite::RunConfig cfg;
  cfg.trials = 3;
  cfg.p_list = {2.5};
  suite::SuiteReport rep = suite::run_suite("thm-tensor-p", cfg);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) CHECK(row.p == 2.5);
}

TEST_CASE("worked examples recompute to identical reports") {
  repro::Report a = repro::run("tensor-hilbert");
  repro::Report b = repro::run("tensor-hilbert");
  CHECK(a.render() == b.render());
  CHECK(a.pass);
  repro::Report c = repro::run("tensor-l1l1");
  CHECK(c.pass);
  CHECK_THROWS_AS(repro::run("unknown"), std::invalid_argument);
}
