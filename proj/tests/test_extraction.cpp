#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/extraction.hpp"
#include "hilbtaut/linsolve.hpp"
#include "hilbtaut/universal.hpp"

using namespace hilbtaut;

TEST_CASE("exact solve matches Gauss-Jordan") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    Matrix a(n, std::vector<BigRational>(n));
    std::vector<BigRational> b(n);
    for (auto& row : a) {
      for (auto& x : row) x = rational(d(rng), 1 + std::abs(d(rng)));
    }
    for (auto& x : b) x = rational(d(rng), 1 + std::abs(d(rng)));
    if (matrix_rank(a) < static_cast<long>(n)) continue;
    CHECK(solve_exact(a, b) == oracle::gauss_jordan(a, b));
  }
}

TEST_CASE("overdetermined systems") {
  const Matrix a{{1, 0}, {0, 1}, {1, 1}};
  CHECK(solve_exact(a, {2, 3, 5}) == std::vector<BigRational>{2, 3});
  try {
    (void)solve_exact(a, {2, 3, 6});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::universality_violation);
  }
  try {
    (void)solve_exact({{1, 2}, {2, 4}, {3, 6}}, {1, 2, 3});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_invertible);
  }
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(matrix_rank({{rational(1, 2), 1}, {1, rational(1, 3)}}) == 2);
}

TEST_CASE("panel construction") {
  for (int s : {0, 1, 2}) {
    const GeometryPanel p = build_panel(s);
    CHECK(p.rows.size() == 7);
    for (const auto& r : p.rows) CHECK(r.numerics.s == s);
  }
  // a single surface fixes chi(O) and K^2, so the rank stays below 5
  GeometryPanel p = build_panel(1, 9);
  std::vector<PanelRow> p2_only;
  for (const auto& r : p.rows) {
    if (r.surface.name == "p2") p2_only.push_back(r);
  }
  try {
    (void)make_panel(1, p2_only);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::panel);
  }
  CHECK_THROWS_AS(build_panel(1, 4), Error);
}

TEST_CASE("order 0 extraction gives constant series") {
  const ExtractionReport r = extract_universal(1, 0, build_panel(1));
  for (const auto& c : r.series) CHECK(c.extracted == Series::one(Var::z, 0));
}

TEST_CASE("rank one extraction to order 3 and row-order invariance") {
  GeometryPanel panel = build_panel(1);
  const ExtractionReport r = extract_universal(1, 3, panel);
  for (const auto& c : r.series) {
    CAPTURE(c.name);
    CHECK(c.matches());
    CHECK(c.reference_status == "proven");
  }
  std::reverse(panel.rows.begin(), panel.rows.end());
  const ExtractionReport rr = extract_universal(1, 3, panel);
  for (std::size_t i = 0; i < r.series.size(); ++i) CHECK(r.series[i].extracted == rr.series[i].extracted);
  // any spanning subset gives the same answer
  panel.rows.pop_back();
  panel.rows.pop_back();
  const ExtractionReport sub = extract_universal(1, 3, make_panel(1, panel.rows));
  for (std::size_t i = 0; i < r.series.size(); ++i) CHECK(r.series[i].extracted == sub.series[i].extracted);
}

TEST_CASE("rank zero: A4 is one and A3 follows the conjecture") {
  const ExtractionReport r = predict_unknown(0, 4);
  CHECK(r.series[4].extracted == Series::one(Var::z, 4));
  CHECK(r.series[3].reference_status == "conjectural");
  CHECK(r.series[3].agreement_order >= 3);
}

TEST_CASE("rank three yields data without a reference") {
  const ExtractionReport r = predict_unknown(3, 2);
  CHECK(r.series[0].matches());
  CHECK_FALSE(r.series[3].reference);
  CHECK(r.series[3].reference_status == "none");
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("Verlinde extraction at r = 0") {
  const ExtractionReport r = extract_verlinde(0, 3);
  for (const auto& c : r.series) CHECK(c.matches());
  CHECK(r.series[2].extracted == Series::one(Var::w, 3));
  CHECK(r.series[3].extracted == Series::one(Var::w, 3));
}

TEST_CASE("agreement order") {
  const Series a = Series::from_polynomial(Var::z, 3, ints({1, 2, 3, 4}));
  CHECK(agreement_order(a, a) == 3);
  CHECK(agreement_order(a, Series::from_polynomial(Var::z, 3, ints({1, 2, 0, 4}))) == 1);
  CHECK(agreement_order(a, Series::from_polynomial(Var::z, 3, ints({0, 2, 3, 4}))) == -1);
}

TEST_CASE("JSON report layout") {
  const auto j = extraction_report_to_json(extract_verlinde(1, 2));
  CHECK(j["kind"] == "verlinde");
  CHECK(j["r"] == 1);
  CHECK(j["panel"].size() >= 4);
  CHECK(j["series"].size() == 4);
  CHECK(j["series"][0]["matches"] == true);
}
