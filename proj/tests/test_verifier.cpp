#include <doctest.h>

#include "helpers.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/verifier.hpp"

using namespace hilbtaut;

TEST_CASE("residue coefficient at d = 0 is a single binomial") {
  // [t^n] (1 + r t)^{chi - r n}
  for (long r = 2; r <= 4; ++r) {
    for (long n = 0; n <= 5; ++n) {
      for (long chi = -6; chi <= 12; ++chi) {
        CHECK(residue_coeff(0, chi, r, n) == power(BigRational(r), n) * oracle::int_binom(chi - r * n, static_cast<int>(n)));
      }
    }
  }
}

TEST_CASE("residue vanishing window at d = 0") {
  // chi - r n in [0, n) forces the binomial to vanish
  const long r = 3;
  const long n = 4;
  for (long chi = r * n; chi < r * n + n; ++chi) CHECK(residue_coeff(0, chi, r, n) == 0);
  CHECK(residue_coeff(0, r * n + n, r, n) != 0);
}

TEST_CASE("blowup excess equals the double-sum oracle and (-1)^n (2n+1)") {
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    const BigRational v = blowup_excess(n);
    CHECK(v == oracle::blowup_double_sum(n));
    CHECK(v == BigRational((n % 2 == 0 ? 1 : -1) * (2 * n + 1)));
  }
}

TEST_CASE("report records the first counterexample") {
  CheckReport r;
  r.expect(true, {{"n", "1"}});
  r.expect(false, {{"n", "2"}});
  r.expect(false, {{"n", "3"}});
  CHECK_FALSE(r.passed);
  CHECK(r.cases == 3);
  REQUIRE(r.counterexample.size() == 1);
  CHECK(r.counterexample[0].second == "2");
  const auto j = report_to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["counterexample"]["n"] == "2");
}

TEST_CASE("every suite passes at the default order") {
  SuiteOptions opt;
  opt.order = 10;
  opt.random_cases = 20;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    for (const auto& rep : run_suite(name, opt)) {
      CAPTURE(rep.name);
      CHECK(rep.passed);
      CHECK(rep.cases > 0);
    }
  }
}

TEST_CASE("unknown suite is rejected") {
  try {
    (void)run_suite("nope", {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
}

TEST_CASE("theta constant term depends on n mod 3") {
  for (int n = 0; n <= 9; ++n) {
    const CheckReport r = check_theta_constant(n, 3);
    CHECK(r.passed);
  }
}

TEST_CASE("Lagrange-Burmann on a fixed pair") {
  const Series f = Series::from_polynomial(Var::x, 8, {BigRational(1), BigRational(3)});
  const Series g = Series::from_polynomial(Var::x, 8, {BigRational(1), BigRational(0), BigRational(2)});
  CHECK(check_lagrange_burmann(f, g, 8).passed);
}
