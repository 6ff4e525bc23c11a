#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hilbtaut/biseries.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/series.hpp"
#include "hilbtaut/series_json.hpp"
#include "hilbtaut/universal.hpp"

using namespace hilbtaut;

namespace {

Series lin(BigRational a, int order) {
  return Series::from_polynomial(Var::t, order, {BigRational(1), a});
}

Series random_unit(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = rational(d(rng), 1 + (k % 3));
  return Series(Var::x, c);
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(rational(-6, 1)) == "-6");
  CHECK(to_fraction_string(rational(-6, 1)) == "-6/1");
  CHECK(to_fraction_string(rational(4, -6)) == "-2/3");
  CHECK(parse_rational("10/4") == rational(5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(binomial(rational(1, 2), 2) == rational(-1, 8));
  CHECK(binomial(BigRational(-3), 2) == 6);
}

TEST_CASE("order mismatch is an error") {
  const Series a = Series::one(Var::t, 3);
  const Series b = Series::one(Var::t, 4);
  try {
    (void)mul(a, b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::order_mismatch);
  }
}

TEST_CASE("inverse and product") {
  const Series a = lin(1, 5);
  const Series inv = inverse(a);
  CHECK(inv.coefficients() == ints({1, -1, 1, -1, 1, -1}));
  CHECK(mul(a, inv) == Series::one(Var::t, 5));
  CHECK_THROWS_AS(inverse(Series::zero(Var::t, 3)), Error);
}

TEST_CASE("rational powers agree with the binomial sum") {
  for (int num = -5; num <= 5; ++num) {
    for (int den : {1, 2, 3, 4}) {
      for (long a : {-3L, 2L, 7L}) {
        const BigRational e = rational(num, den);
        const Series got = pow_rational(lin(a, 9), e);
        CHECK(to_poly(got) == oracle::binomial_power(a, e, 9));
      }
    }
  }
  CHECK(pow_int(lin(2, 6), -3).coefficients() == oracle::binomial_power(2, -3, 6));
}

TEST_CASE("pow_rational needs constant term one") {
  const Series a = Series::from_polynomial(Var::t, 3, {BigRational(2), BigRational(1)});
  try {
    (void)pow_rational(a, rational(1, 2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_unit_base);
  }
}

TEST_CASE("reversion agrees with brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Series f = shift_up(random_unit(rng, 8), 1);
    const Series g = revert(f);
    CHECK(to_poly(g) == oracle::brute_force_revert(to_poly(f)));
    CHECK(compose(f, g) == Series::variable(Var::x, 8));
  }
  CHECK_THROWS_AS(revert(Series::one(Var::x, 4)), Error);
}

TEST_CASE("compose agrees with naive substitution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Series outer = random_unit(rng, 7);
    const Series inner = shift_up(random_unit(rng, 7), 1);
    CHECK(to_poly(compose(outer, inner)) == oracle::compose(to_poly(outer), to_poly(inner)));
  }
  try {
    (void)compose(Series::one(Var::x, 3), Series::one(Var::x, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::composition_domain);
  }
}

TEST_CASE("log and exp are inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Series a = random_unit(rng, 10);
    CHECK(exp(log(a)) == a);
    const Series b = log(a);
    CHECK(log(exp(b)) == b);
    CHECK(log(mul(a, a)) == b + b);
  }
}

TEST_CASE("derivative and division by the variable drop the order") {
  const Series a = Series::from_polynomial(Var::t, 4, ints({0, 0, 3, 1, 2}));
  const Series d = derivative(a);
  CHECK(d.order() == 3);
  CHECK(d.coefficients() == ints({0, 6, 3, 8}));
  const Series q = div_by_var(a, 2);
  CHECK(q.order() == 2);
  CHECK(q.coefficients() == ints({3, 1, 2}));
  CHECK_THROWS_AS(div_by_var(a, 3), Error);
  CHECK(derivative(Series::one(Var::t, 0)).order() == 0);
}

TEST_CASE("coefficient access out of range") {
  const Series a = Series::one(Var::t, 2);
  try {
    (void)a.coeff(3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::range);
  }
}

TEST_CASE("quartic y(t) expansion") {
  const Series y = y_series(6);
  CHECK(y.coefficients() == ints({0, 1, -6, 41, -314, 2630, -23532}));
  CHECK(evaluate_relation(y_relation(), y).is_zero());
  CHECK(Y_series(6).coefficients() == ints({0, 1, -3, 14, -80, 509, -3459}));
}

TEST_CASE("solve_algebraic rejects a singular relation") {
  // y^2 - t has no power-series root with y(0) = 0.
  const BiSeries p = BiSeries::from_terms(Var::y, Var::t, 2, 1, {{2, 0, BigRational(1)}, {0, 1, BigRational(-1)}});
  CHECK_THROWS_AS(solve_algebraic(p, 5), Error);
}

TEST_CASE("bivariate coefficients") {
  const BiSeries h = BiSeries::from_terms(Var::h, Var::zeta, 4, 4, {{1, 0, BigRational(1)}, {0, 1, BigRational(1)}});
  const BiSeries one = BiSeries::constant(Var::h, Var::zeta, 4, 4, 1);
  const BiSeries g = pow_int(one - h, -2);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      CHECK(bicoeff(g, a, b) == (a + b + 1) * oracle::int_binom(a + b, a));
    }
  }
  CHECK_THROWS_AS(bicoeff(g, 5, 0), Error);
}

TEST_CASE("JSON round trip") {
  const Series a = Series::from_polynomial(Var::w, 3, {rational(1, 2), rational(-3), rational(0), rational(7, 9)});
  const std::string text = series_to_json_string(a);
  const Series b = series_from_json_string(text);
  CHECK(a == b);
  CHECK(b.var() == Var::w);
  CHECK_THROWS_AS(series_from_json_string("{\"variable\": \"t\", \"order\": 2, \"coefficients\": [\"1\"]}"), Error);
  CHECK_THROWS_AS(series_from_json_string("not json"), Error);
}
