#include <doctest.h>

#include "clifan/verify.hpp"

using namespace clifan;

TEST_CASE("small suite passes and is deterministic") {
  VerifyConfig config;
  config.dimensions = {2, 3};
  config.trials = 3;
  const VerifyReport a = run_verification(config);
  CHECK(a.all_passed());
  CHECK(!a.results.empty());
  CHECK(format_text(a) == format_text(run_verification(config)));
  CHECK(report_to_json(a)["allPassed"] == true);
}

TEST_CASE("injected fault is reported against the recursion") {
  VerifyConfig config;
  config.dimensions = {3};
  config.trials = 2;
  config.fault = "recursion";
  const VerifyReport report = run_verification(config);
  CHECK(!report.all_passed());
  for (const auto& r : report.results) {
    const bool is_recursion = r.name.find("recursion") != std::string::npos;
    CHECK(r.passed() != is_recursion);
    if (is_recursion) {
      REQUIRE(r.counterexample);
      CHECK(r.counterexample->lhs != r.counterexample->rhs);
    }
  }
  CHECK(format_text(report).find("FAIL m=3  recursion") != std::string::npos);
}

TEST_CASE("invalid configuration") {
  VerifyConfig config;
  config.dimensions = {1};
  CHECK_THROWS_AS(run_verification(config), std::invalid_argument);
  config.dimensions = {3};
  config.trials = 0;
  CHECK_THROWS_AS(run_verification(config), std::invalid_argument);
}

TEST_CASE("demo expectations") {
  for (const auto& c : run_demo()) {
    INFO(c.name);
    CHECK(c.ok);
  }
}
