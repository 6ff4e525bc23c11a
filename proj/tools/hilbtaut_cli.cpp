#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbtaut/hilbtaut.h"

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kDefaultSeed = 20240601;

struct ApiError {
  ht_status status;
  std::string message;
};

void check(ht_status st) {
  if (st != HT_OK) throw ApiError{st, ht_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ht_string_free(s);
  return out;
}

using SeriesPtr = std::unique_ptr<ht_series, decltype(&ht_series_free)>;

int env_order(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring non-integer " << name << "=" << v << "\n";
    return fallback;
  }
}

/// Writes to --output when given, stdout otherwise.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ApiError{HT_ERR_INVALID_ARGUMENT, "cannot open " + path + " for writing"};
  f << text;
}

/// "p" -> "p/1" so table output is uniformly p/q.
std::string as_fraction(const std::string& q) { return q.find('/') == std::string::npos ? q + "/1" : q; }

std::string config_comment(const ojson& config) {
  std::string out;
  for (const auto& [k, v] : config.items()) out += "# " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

int run_series(const std::string& family, int rank, int index, int order, const std::string& format,
               const std::string& output) {
  ht_series* raw = nullptr;
  char* meta = nullptr;
  check(ht_catalog_series(family.c_str(), rank, index, order, &raw, &meta));
  SeriesPtr s(raw, &ht_series_free);
  const ojson metadata = ojson::parse(take(meta));
  ojson config = {{"command", "series"}, {"family", family}, {"rank", rank},
                  {"index", index},      {"order", order},   {"format", format}};
  std::vector<std::string> coeffs;
  for (int k = 0; k <= ht_series_order(s.get()); ++k) {
    char* c = nullptr;
    check(ht_series_coefficient(s.get(), k, &c));
    coeffs.push_back(take(c));
  }
  std::ostringstream out;
  if (format == "json") {
    char* js = nullptr;
    check(ht_series_to_json(s.get(), &js));
    ojson j;
    j["config"] = config;
    j["metadata"] = metadata;
    j["series"] = ojson::parse(take(js));
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << config_comment(config) << "offset,coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << "," << coeffs[k] << "\n";
  } else {
    out << config_comment(config);
    out << "# status=" << metadata.value("status", "") << "\n";
    out << "offset  coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << "  " << coeffs[k] << "\n";
    // One-line form starting at the first offset used by the family (1 for y and Y, 0 otherwise).
    const std::size_t first = (family == "y" || family == "Y") ? 1 : 0;
    out << "offsets " << first << ".." << coeffs.size() - 1 << ": ";
    for (std::size_t k = first; k < coeffs.size(); ++k) out << (k > first ? ", " : "") << coeffs[k];
    out << "\n";
  }
  emit(out.str(), output);
  return kExitOk;
}

int run_verify(const std::string& suite, int order, std::uint64_t seed, int cases, const std::string& format,
               const std::string& output) {
  char* js = nullptr;
  int passed = 0;
  check(ht_verify_run(suite.c_str(), order, seed, cases, &js, &passed));
  ojson report = ojson::parse(take(js));
  std::ostringstream out;
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    ojson config = {{"command", "verify"}, {"suite", suite}, {"order", order}, {"seed", seed}, {"cases", cases}};
    out << config_comment(config);
    const char sep = format == "csv" ? ',' : ' ';
    if (format == "csv") out << "check,status,grade,cases\n";
    for (const auto& c : report["checks"]) {
      out << c["name"].get<std::string>() << sep << c["status"].get<std::string>() << sep
          << c["grade"].get<std::string>() << sep << c["cases"].get<long>() << "\n";
      if (format == "table" && c.contains("counterexample")) out << "  counterexample: " << c["counterexample"].dump() << "\n";
    }
    if (format == "table") out << (passed ? "all checks passed" : "FAILED") << "\n";
  }
  emit(out.str(), output);
  return passed ? kExitOk : kExitFailure;
}

int run_oracle(const std::string& surface, const std::string& cls, int n, const std::string& kind, int r,
               std::uint64_t seed, const std::string& format, const std::string& output) {
  char* js = nullptr;
  check(ht_oracle_run(surface.c_str(), cls.c_str(), n, kind.c_str(), r, seed, &js));
  ojson report = ojson::parse(take(js));
  std::ostringstream out;
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    ojson config = {{"command", "oracle"}, {"surface", surface}, {"class", cls}, {"n", n},
                    {"kind", kind},        {"r", r},             {"seed", seed}};
    out << config_comment(config);
    out << (format == "csv" ? "n,value\n" : "n  value\n");
    const auto& values = report["values"];
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << k << (format == "csv" ? "," : "  ") << values[k].get<std::string>() << "\n";
    }
  }
  emit(out.str(), output);
  return kExitOk;
}

int run_extract(const std::string& kind, int rank, int order, std::uint64_t seed, const std::string& format,
                const std::string& json_path, const std::string& output) {
  char* js = nullptr;
  int matched = 0;
  check(ht_extract_run(kind.c_str(), rank, order, seed, &js, &matched));
  ojson report = ojson::parse(take(js));
  report["config"] = {{"command", "extract"}, {"kind", kind}, {"rank", rank}, {"order", order}, {"seed", seed}};
  if (!json_path.empty()) emit(report.dump(2) + "\n", json_path);
  std::ostringstream out;
  if (format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << config_comment(report["config"]);
    out << "panel rows: " << report["panel"].size() << "\n";
    for (const auto& s : report["series"]) {
      out << s["name"].get<std::string>() << ": ";
      const auto& c = s["extracted"]["coefficients"];
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << as_fraction(c[k].get<std::string>());
      out << "  [" << s["reference_status"].get<std::string>();
      if (s.contains("agreement_order")) out << ", agrees through order " << s["agreement_order"].get<int>();
      out << "]\n";
    }
    for (const auto& note : report["notes"]) out << "note: " << note.get<std::string>() << "\n";
  }
  emit(out.str(), output);
  return matched ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal series of tautological integrals on Hilbert schemes of points"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const int series_default = env_order("HILBTAUT_ORDER", 10);
  const int oracle_default = env_order("HILBTAUT_ORACLE_ORDER", 4);
  const std::vector<std::string> formats{"json", "csv", "table"};

  std::string output;
  std::string format = "table";

  auto* series = app.add_subcommand("series", "Print a catalog series");
  std::string family;
  int rank = 1;
  int index = 0;
  int order = series_default;
  series->add_option("--family", family, "segreA, chernA, verlindeB, y or Y")->required();
  series->add_option("--rank", rank, "s for segreA/chernA, r for verlindeB");
  series->add_option("--index", index, "series index");
  series->add_option("--order", order, "truncation order (default 10, env HILBTAUT_ORDER)");
  series->add_option("--format", format)->check(CLI::IsMember(formats));
  series->add_option("--output,-o", output, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  int cases = 50;
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--order", order, "series order (default 10, env HILBTAUT_ORDER)");
  verify->add_option("--seed", seed);
  verify->add_option("--cases", cases, "random cases for property suites");
  verify->add_option("--format", format)->check(CLI::IsMember(formats));
  verify->add_option("--output,-o", output);
  bool list_suites = false;
  verify->add_flag("--list", list_suites, "list suite names and exit");

  auto* oracle = app.add_subcommand("oracle", "Localization integrals on a toric surface");
  std::string surface;
  std::string cls;
  std::string kind = "segre";
  int n = oracle_default;
  int r = 0;
  bool as_json = false;
  oracle->add_option("--surface", surface)->required()->check(CLI::IsMember({"p2", "p1xp1", "f1"}));
  oracle->add_option("--class", cls, "signed sum such as O(2,1)+O(0,1)-O(1,0)")->required();
  oracle->add_option("--n", n, "largest n (default 4, env HILBTAUT_ORACLE_ORDER)");
  oracle->add_option("--kind", kind)->check(CLI::IsMember({"segre", "chern", "verlinde"}));
  oracle->add_option("--r", r, "twist for verlinde");
  oracle->add_option("--seed", seed);
  oracle->add_flag("--json", as_json, "same as --format json");
  oracle->add_option("--format", format)->check(CLI::IsMember(formats));
  oracle->add_option("--output,-o", output);

  auto* extract = app.add_subcommand("extract", "Recover universal series from oracle rows");
  std::string json_path;
  int extract_order = oracle_default;
  std::string extract_kind = "segre";
  extract->add_option("--rank", rank, "s for segre, r for verlinde")->required();
  extract->add_option("--order", extract_order, "extraction order (default 4, env HILBTAUT_ORACLE_ORDER)");
  extract->add_option("--kind", extract_kind)->check(CLI::IsMember({"segre", "verlinde"}));
  extract->add_option("--seed", seed);
  extract->add_option("--json", json_path, "also write the full JSON report to this path");
  extract->add_option("--format", format)->check(CLI::IsMember(formats));
  extract->add_option("--output,-o", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (series->parsed()) return run_series(family, rank, index, order, format, output);
    if (verify->parsed()) {
      if (list_suites) {
        char* js = nullptr;
        check(ht_verify_suite_names(&js));
        for (const auto& name : ojson::parse(take(js))) std::cout << name.get<std::string>() << "\n";
        return kExitOk;
      }
      return run_verify(suite, order, seed, cases, format, output);
    }
    if (oracle->parsed()) return run_oracle(surface, cls, n, kind, r, seed, as_json ? "json" : format, output);
    if (extract->parsed()) return run_extract(extract_kind, rank, extract_order, seed, format, json_path, output);
  } catch (const ApiError& e) {
    std::cerr << "error (" << ht_status_name(e.status) << "): " << e.message << "\n";
    const bool usage = e.status == HT_ERR_INVALID_ARGUMENT || e.status == HT_ERR_PARSE ||
                       e.status == HT_ERR_UNKNOWN_SERIES;
    return usage ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
