#include <doctest.h>

#include <stdexcept>

#include "fstack/verify.hpp"

using namespace fstack::verify;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 9);
  CHECK(names[0] == "oracle");
  CHECK(names.back() == "figure-1");
  CHECK_THROWS_AS((void)run_suite("no-such-suite", 3), std::invalid_argument);
}

TEST_CASE("every suite passes at reduced depth") {
  for (const std::string& name : suite_names()) {
    const SuiteResult r = run_suite(name, 4);
    CHECK(r.passed);
    CHECK(r.name == name);
    CHECK(r.checked > 0);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("parallel and serial sweeps agree") {
  const SuiteResult par = check_normalization(5, true);
  const SuiteResult ser = check_normalization(5, false);
  CHECK(par.passed == ser.passed);
  CHECK(par.checked == ser.checked);
  CHECK(par.failures == ser.failures);

  const SuiteResult cs_par = check_claim_star(5, true);
  const SuiteResult cs_ser = check_claim_star(5, false);
  CHECK(cs_par.passed == cs_ser.passed);
  CHECK(cs_par.checked == cs_ser.checked);
}

TEST_CASE("individual suites report their scope") {
  const SuiteResult oracle = check_oracle(3);
  CHECK(oracle.passed);
  // 1 + 4 + 12 + 36 reduced words plus the two relator identities
  CHECK(oracle.checked == 55);

  const SuiteResult reg = check_regularity(6);
  CHECK(reg.passed);

  const SuiteResult fig = check_figure_one();
  CHECK(fig.passed);
  CHECK(fig.checked >= 1);

  const SuiteResult flow = check_flow_termination(2);
  CHECK(flow.passed);

  const SuiteResult diag = check_diagrams(4);
  CHECK(diag.passed);

  const SuiteResult bounds = check_bounds(4);
  CHECK(bounds.passed);

  const SuiteResult sym = check_sigma_symmetry(4);
  CHECK(sym.passed);
}
