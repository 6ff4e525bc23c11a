#include "hilbtaut/hilbtaut.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "hilbtaut/error.hpp"
#include "hilbtaut/extraction.hpp"
#include "hilbtaut/oracle.hpp"
#include "hilbtaut/series.hpp"
#include "hilbtaut/series_json.hpp"
#include "hilbtaut/toric.hpp"
#include "hilbtaut/universal.hpp"
#include "hilbtaut/verifier.hpp"

struct ht_series {
  hilbtaut::Series value;
};

namespace {

using hilbtaut::Error;
using hilbtaut::ErrorCode;
using hilbtaut::Series;
using ojson = nlohmann::ordered_json;

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ht_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<ht_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return HT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return HT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

template <typename F>
ht_status unary(const ht_series* a, ht_series** out, F&& f) {
  return guarded([&] {
    require(a, "series");
    require(out, "out");
    *out = new ht_series{f(a->value)};
  });
}

ojson series_json(const Series& s) { return ojson(hilbtaut::series_to_json(s)); }

}  // namespace

extern "C" {

const char* ht_last_error(void) { return last_error.c_str(); }

const char* ht_status_name(ht_status status) {
  if (status == HT_OK) return "ok";
  return hilbtaut::error_code_name(static_cast<ErrorCode>(status)).data();
}

void ht_string_free(char* s) { std::free(s); }

ht_status ht_series_parse_json(const char* json, ht_series** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new ht_series{hilbtaut::series_from_json_string(json)};
  });
}

ht_status ht_series_to_json(const ht_series* s, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = copy_string(hilbtaut::series_to_json_string(s->value));
  });
}

void ht_series_free(ht_series* s) { delete s; }

int ht_series_order(const ht_series* s) { return s ? s->value.order() : -1; }

ht_status ht_series_coefficient(const ht_series* s, int k, char** out) {
  return guarded([&] {
    require(s, "series");
    require(out, "out");
    *out = copy_string(hilbtaut::to_fraction_string(s->value.coeff(k)));
  });
}

ht_status ht_series_mul(const ht_series* a, const ht_series* b, ht_series** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new ht_series{hilbtaut::mul(a->value, b->value)};
  });
}

ht_status ht_series_compose(const ht_series* outer, const ht_series* inner, ht_series** out) {
  return guarded([&] {
    require(outer, "outer");
    require(inner, "inner");
    require(out, "out");
    *out = new ht_series{hilbtaut::compose(outer->value, inner->value)};
  });
}

ht_status ht_series_revert(const ht_series* a, ht_series** out) {
  return unary(a, out, [](const Series& s) { return hilbtaut::revert(s); });
}

ht_status ht_series_pow_rational(const ht_series* a, const char* exponent, ht_series** out) {
  return guarded([&] {
    require(exponent, "exponent");
    const hilbtaut::BigRational e = hilbtaut::parse_rational(exponent);
    require(a, "series");
    require(out, "out");
    *out = new ht_series{hilbtaut::pow_rational(a->value, e)};
  });
}

ht_status ht_series_log(const ht_series* a, ht_series** out) {
  return unary(a, out, [](const Series& s) { return hilbtaut::log(s); });
}

ht_status ht_series_exp(const ht_series* a, ht_series** out) {
  return unary(a, out, [](const Series& s) { return hilbtaut::exp(s); });
}

ht_status ht_series_derivative(const ht_series* a, ht_series** out) {
  return unary(a, out, [](const Series& s) { return hilbtaut::derivative(s); });
}

ht_status ht_catalog_json(char** out) {
  return guarded([&] {
    require(out, "out");
    ojson j;
    j["every_rank"] = {
        {{"family", "segreA"}, {"indices", {0, 1, 2}}, {"status", "proven"}},
        {{"family", "chernA"}, {"indices", {0, 1, 2}}, {"status", "proven"}},
        {{"family", "verlindeB"}, {"indices", {1, 2}}, {"status", "proven"}},
        {{"family", "y"}, {"status", "proven"}},
        {{"family", "Y"}, {"status", "proven"}},
    };
    ojson entries = ojson::array();
    for (const auto& e : hilbtaut::catalog_listing()) {
      entries.push_back({{"family", std::string(hilbtaut::family_name(e.family))},
                         {e.family == hilbtaut::Family::verlindeB ? "r" : "rank", e.rank},
                         {"index", e.index},
                         {"status", std::string(hilbtaut::status_name(e.status))}});
    }
    j["fixed_rank"] = entries;
    *out = copy_string(j.dump(2));
  });
}

ht_status ht_catalog_series(const char* family, int rank, int index, int order, ht_series** out, char** metadata) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    using hilbtaut::Family;
    const Family f = hilbtaut::parse_family(family);
    ojson meta;
    meta["family"] = std::string(hilbtaut::family_name(f));
    Series result;
    if (f == Family::y_quartic || f == Family::Y_quartic) {
      result = f == Family::y_quartic ? hilbtaut::y_series(order) : hilbtaut::Y_series(order);
      meta["status"] = "proven";
    } else {
      const hilbtaut::CatalogEntry e = f == Family::segreA   ? hilbtaut::segre_A(rank, index, order)
                                       : f == Family::chernA ? hilbtaut::chern_A(rank, index, order)
                                                             : hilbtaut::verlinde_B(rank, index, order);
      result = e.series;
      meta[f == Family::verlindeB ? "r" : "rank"] = e.rank;
      meta["index"] = e.index;
      if (f != Family::verlindeB) meta["r"] = e.r;
      meta["rank_convention"] = std::string(hilbtaut::convention_name(e.convention));
      meta["status"] = std::string(hilbtaut::status_name(e.status));
      meta["in_t"] = series_json(e.in_t);
      meta["change_of_variable"] = series_json(e.change_of_variable);
    }
    if (metadata) *metadata = copy_string(meta.dump());
    *out = new ht_series{std::move(result)};
  });
}

ht_status ht_segre_full(int s, long c2, long c1sq, long chi_o, long c1k, long ksq, int order, int allow_conjectural,
                        ht_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ht_series{hilbtaut::segre_full(s, {c2, c1sq, chi_o, c1k, ksq}, order, allow_conjectural != 0)};
  });
}

ht_status ht_verlinde_full(int r, long chi_l, long chi_o, long c1k, long ksq, int order, int allow_conjectural,
                           ht_series** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ht_series{hilbtaut::verlinde_full(r, {chi_l, chi_o, c1k, ksq}, order, allow_conjectural != 0)};
  });
}

ht_status ht_verify_suite_names(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(ojson(hilbtaut::suite_names()).dump());
  });
}

ht_status ht_verify_run(const char* suite, int order, uint64_t seed, int random_cases, char** out, int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    hilbtaut::SuiteOptions opt;
    opt.order = order;
    opt.seed = seed;
    opt.random_cases = random_cases;
    const auto reports = hilbtaut::run_suite(suite, opt);
    ojson arr = ojson::array();
    bool ok = true;
    for (const auto& r : reports) {
      arr.push_back(hilbtaut::report_to_json(r));
      ok = ok && r.passed;
    }
    ojson j;
    j["suite"] = suite;
    j["order"] = order;
    j["seed"] = seed;
    j["random_cases"] = random_cases;
    j["passed"] = ok;
    j["checks"] = arr;
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out = copy_string(j.dump(2));
  });
}

ht_status ht_oracle_run(const char* surface, const char* class_spec, int n, const char* kind, int r, uint64_t seed,
                        char** out) {
  return guarded([&] {
    require(surface, "surface");
    require(class_spec, "class");
    require(kind, "kind");
    require(out, "out");
    const std::string k = kind;
    if (k != "segre" && k != "chern" && k != "verlinde") {
      throw Error(ErrorCode::invalid_argument, "oracle kind must be segre, chern or verlinde");
    }
    if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
    const hilbtaut::ToricSurface s = hilbtaut::make_surface(surface);
    const hilbtaut::EqKClass alpha = hilbtaut::parse_class(s, class_spec);
    const hilbtaut::ClassNumerics num = hilbtaut::class_numerics(s, alpha);
    if (k == "verlinde" && (alpha.terms.size() != 1 || alpha.terms[0].sign != 1)) {
      throw Error(ErrorCode::invalid_argument, "verlinde needs a single line bundle O(...)");
    }
    hilbtaut::OracleOptions opt;
    opt.seed = seed;
    ojson values = ojson::array();
    ojson traces = ojson::array();
    for (int m = 0; m <= n; ++m) {
      hilbtaut::OracleTrace tr;
      std::string v;
      if (k == "segre") {
        v = hilbtaut::to_fraction_string(hilbtaut::segre_integral(s, alpha, m, opt, &tr));
      } else if (k == "chern") {
        v = hilbtaut::to_fraction_string(hilbtaut::chern_integral(s, alpha, m, opt, &tr));
      } else {
        v = hilbtaut::verlinde_chi(s, alpha.terms[0].bundle, r, m, opt, &tr).get_str() + "/1";
      }
      values.push_back(v);
      if (m > 0) {
        traces.push_back({{"n", m},
                          {"fixed_points", tr.fixed_points},
                          {"q_first", {hilbtaut::to_fraction_string(tr.first.q1),
                                       hilbtaut::to_fraction_string(tr.first.q2)}},
                          {"q_second", {hilbtaut::to_fraction_string(tr.second.q1),
                                        hilbtaut::to_fraction_string(tr.second.q2)}}});
      }
    }
    ojson j;
    j["surface"] = s.name;
    j["class"] = hilbtaut::format_class(alpha);
    j["kind"] = k;
    if (k == "verlinde") j["r"] = r;
    j["n"] = n;
    j["seed"] = seed;
    j["numerics"] = {{"rank", num.s},     {"c1^2", num.c1sq}, {"c2", num.c2},   {"c1.K", num.c1K},
                     {"chi(O)", num.chiO}, {"K^2", num.Ksq},   {"chi(L)", num.chiL}};
    j["values"] = values;
    j["value"] = values.back();
    j["specializations"] = traces;
    *out = copy_string(j.dump(2));
  });
}

ht_status ht_extract_run(const char* kind, int rank, int order, uint64_t seed, char** out, int* all_matched) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const std::string k = kind;
    hilbtaut::OracleOptions opt;
    opt.seed = seed;
    hilbtaut::ExtractionReport rep;
    if (k == "segre") {
      rep = hilbtaut::predict_unknown(rank, order, opt);
    } else if (k == "verlinde") {
      rep = hilbtaut::extract_verlinde(rank, order, opt);
    } else {
      throw Error(ErrorCode::invalid_argument, "extract kind must be segre or verlinde");
    }
    bool ok = true;
    for (const auto& c : rep.series) {
      if (c.reference && c.reference_status != "conjectural") ok = ok && c.matches();
    }
    ojson j = hilbtaut::extraction_report_to_json(rep);
    j["proven_series_match"] = ok;
    if (all_matched) *all_matched = ok ? 1 : 0;
    *out = copy_string(j.dump(2));
  });
}

}  // extern "C"
