#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hilbtaut/hilbtaut.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ht_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: series round trip and arithmetic") {
  ht_series* a = nullptr;
  REQUIRE(ht_series_parse_json(R"({"variable": "t", "order": 4, "coefficients": ["1", "1", "0", "0", "0"]})", &a) ==
          HT_OK);
  CHECK(ht_series_order(a) == 4);
  ht_series* half = nullptr;
  REQUIRE(ht_series_pow_rational(a, "1/2", &half) == HT_OK);
  char* c = nullptr;
  REQUIRE(ht_series_coefficient(half, 2, &c) == HT_OK);
  CHECK(take(c) == "-1/8");
  ht_series* sq = nullptr;
  REQUIRE(ht_series_mul(half, half, &sq) == HT_OK);
  char* js = nullptr;
  REQUIRE(ht_series_to_json(sq, &js) == HT_OK);
  const auto j = nlohmann::json::parse(take(js));
  CHECK(j["coefficients"][1] == "1");
  CHECK(j["coefficients"][2] == "0");
  ht_series* l = nullptr;
  ht_series* e = nullptr;
  REQUIRE(ht_series_log(a, &l) == HT_OK);
  REQUIRE(ht_series_exp(l, &e) == HT_OK);
  REQUIRE(ht_series_coefficient(e, 1, &c) == HT_OK);
  CHECK(take(c) == "1/1");
  for (ht_series* s : {a, half, sq, l, e}) ht_series_free(s);
}

TEST_CASE("C API: errors set status and message") {
  ht_series* out = nullptr;
  CHECK(ht_series_parse_json("{", &out) == HT_ERR_PARSE);
  CHECK(std::string(ht_last_error()).size() > 0);
  CHECK(ht_catalog_series("segreA", 3, 3, 4, &out, nullptr) == HT_ERR_UNKNOWN_SERIES);
  CHECK(std::string(ht_status_name(HT_ERR_UNKNOWN_SERIES)) == "unknown-series");
  CHECK(ht_series_revert(nullptr, &out) == HT_ERR_INVALID_ARGUMENT);
  ht_series* one = nullptr;
  REQUIRE(ht_series_parse_json(R"({"variable": "t", "order": 2, "coefficients": ["2", "1", "0"]})", &one) == HT_OK);
  CHECK(ht_series_log(one, &out) == HT_ERR_DOMAIN);
  CHECK(ht_series_pow_rational(one, "1/2", &out) == HT_ERR_NON_UNIT_BASE);
  ht_series_free(one);
}

TEST_CASE("C API: catalog and runners") {
  ht_series* y = nullptr;
  char* meta = nullptr;
  REQUIRE(ht_catalog_series("y", 0, 0, 5, &y, &meta) == HT_OK);
  char* c = nullptr;
  REQUIRE(ht_series_coefficient(y, 5, &c) == HT_OK);
  CHECK(take(c) == "2630/1");
  CHECK(nlohmann::json::parse(take(meta))["status"] == "proven");
  ht_series_free(y);

  char* listing = nullptr;
  REQUIRE(ht_catalog_json(&listing) == HT_OK);
  CHECK(nlohmann::json::parse(take(listing))["fixed_rank"].size() > 0);

  char* report = nullptr;
  int passed = 0;
  REQUIRE(ht_verify_run("blowup_excess", 10, 1, 5, &report, &passed) == HT_OK);
  CHECK(passed == 1);
  take(report);

  REQUIRE(ht_oracle_run("p2", "O(1)", 3, "segre", 0, 20240601, &report) == HT_OK);
  const auto o = nlohmann::json::parse(take(report));
  CHECK(o["values"] == nlohmann::json::array({"1/1", "1/1", "0/1", "5/1"}));
  CHECK(ht_oracle_run("p2", "O(1)+O(2)", 2, "verlinde", 1, 1, &report) == HT_ERR_INVALID_ARGUMENT);

  int matched = 0;
  REQUIRE(ht_extract_run("segre", 1, 2, 20240601, &report, &matched) == HT_OK);
  CHECK(matched == 1);
  take(report);

  ht_series* full = nullptr;
  CHECK(ht_verlinde_full(2, 3, 1, -3, 9, 3, 1, &full) == HT_ERR_INVALID_ARGUMENT);
  REQUIRE(ht_segre_full(1, 0, 1, 1, -3, 9, 3, 0, &full) == HT_OK);
  REQUIRE(ht_series_coefficient(full, 3, &c) == HT_OK);
  CHECK(take(c) == "5/1");
  ht_series_free(full);
}
