#include "hilbtaut/extraction.hpp"

#include <random>
#include <string>

#include "hilbtaut/error.hpp"
#include "hilbtaut/series_json.hpp"
#include "hilbtaut/universal.hpp"

namespace hilbtaut {

std::vector<long> PanelRow::exponents() const {
  return {numerics.c2, numerics.c1sq, numerics.chiO, numerics.c1K, numerics.Ksq};
}

namespace {

Matrix to_matrix(const std::vector<std::vector<long>>& rows, std::size_t columns) {
  Matrix m;
  for (const auto& r : rows) {
    std::vector<BigRational> out;
    for (std::size_t j = 0; j < columns; ++j) out.emplace_back(r[j]);
    m.push_back(std::move(out));
  }
  return m;
}

long panel_rank(const std::vector<PanelRow>& rows, std::size_t columns) {
  std::vector<std::vector<long>> e;
  for (const auto& r : rows) e.push_back(r.exponents());
  if (e.empty()) return 0;
  return matrix_rank(to_matrix(e, columns));
}

/// Rank-s class: s+1 positive terms and one negative term (or one positive
/// and |s|+1 negative terms for s < 0), coordinates drawn from [-1, 2].
EqKClass random_class(const ToricSurface& surf, int s, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-1, 2);
  auto bundle = [&] {
    std::vector<long> c(surf.rank());
    for (auto& x : c) x = coord(rng);
    return LineBundle{c, {}};
  };
  const int positive = s >= 0 ? s + 1 : 1;
  const int negative = s >= 0 ? 1 : -s + 1;
  EqKClass alpha;
  for (int i = 0; i < positive; ++i) alpha.terms.push_back({1, bundle()});
  for (int i = 0; i < negative; ++i) alpha.terms.push_back({-1, bundle()});
  return alpha;
}

const std::vector<ToricSurface>& panel_surfaces() {
  static const std::vector<ToricSurface> surfaces{make_surface("p2"), make_surface("p1xp1"), make_surface("f1")};
  return surfaces;
}

std::optional<Series> catalog_series(Family family, int rank, int index, int order, std::string& status) {
  try {
    const CatalogEntry e = family == Family::segreA ? segre_A(rank, index, order) : verlinde_B(rank, index, order);
    status = std::string(status_name(e.status));
    return e.series;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::unknown_series) throw;
    status = "none";
    return std::nullopt;
  }
}

/// Solves [log F_row]_n = sum_i e_{row,i} x_i for every n and exponentiates.
std::vector<Series> solve_log_systems(const Matrix& exps, const std::vector<Series>& logs, int order, Var var) {
  const std::size_t k = exps.front().size();
  std::vector<std::vector<BigRational>> coeffs(k, std::vector<BigRational>(static_cast<std::size_t>(order) + 1));
  for (int n = 1; n <= order; ++n) {
    std::vector<BigRational> rhs;
    for (const auto& l : logs) rhs.push_back(l[n]);
    std::vector<BigRational> x;
    try {
      x = solve_exact(exps, rhs);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::universality_violation) throw;
      throw Error(ErrorCode::universality_violation,
                  "oracle rows are not consistent with a universal factorization at n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < k; ++i) coeffs[i][static_cast<std::size_t>(n)] = x[i];
  }
  std::vector<Series> out;
  for (auto& c : coeffs) out.push_back(exp(Series(var, c)));
  return out;
}

SeriesComparison compare(std::string name, Series extracted, std::optional<Series> reference, std::string status) {
  SeriesComparison c{std::move(name), std::move(extracted), std::move(reference), std::move(status), -1};
  if (c.reference) c.agreement_order = agreement_order(c.extracted, *c.reference);
  return c;
}

nlohmann::ordered_json rationals(const std::vector<BigRational>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

}  // namespace

GeometryPanel make_panel(int s, std::vector<PanelRow> rows, bool k_trivial_only) {
  const std::size_t columns = k_trivial_only ? 3 : 5;
  const long rank = panel_rank(rows, columns);
  if (rank < static_cast<long>(columns)) {
    throw Error(ErrorCode::panel, "exponent matrix has rank " + std::to_string(rank) + ", need " +
                                      std::to_string(columns));
  }
  for (const auto& r : rows) {
    if (r.numerics.s != s) throw Error(ErrorCode::panel, "panel class " + format_class(r.alpha) + " has wrong rank");
  }
  return {s, std::move(rows)};
}

GeometryPanel build_panel(int s, int size) {
  if (size < 5) throw Error(ErrorCode::invalid_argument, "panel size must be at least 5");
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(s + 100));
  std::vector<PanelRow> chosen;
  std::vector<PanelRow> spare;
  const auto& surfaces = panel_surfaces();
  for (int attempt = 0; attempt < 60 && static_cast<int>(chosen.size()) < size; ++attempt) {
    const ToricSurface& surf = surfaces[static_cast<std::size_t>(attempt) % surfaces.size()];
    EqKClass alpha = random_class(surf, s, rng);
    PanelRow row{surf, alpha, class_numerics(surf, alpha)};
    const long before = panel_rank(chosen, 5);
    chosen.push_back(row);
    if (panel_rank(chosen, 5) == before && before < 5) {
      chosen.pop_back();
      spare.push_back(std::move(row));
    }
  }
  while (static_cast<int>(chosen.size()) < size && !spare.empty()) {
    chosen.push_back(std::move(spare.back()));
    spare.pop_back();
  }
  return make_panel(s, std::move(chosen));
}

int agreement_order(const Series& a, const Series& b) {
  const int top = std::min(a.order(), b.order());
  int k = -1;
  while (k < top && a[k + 1] == b[k + 1]) ++k;
  return k;
}

ExtractionReport extract_universal(int s, int order, const GeometryPanel& panel, const OracleOptions& options) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "order must be non-negative");
  ExtractionReport rep;
  rep.kind = "segre";
  rep.rank = s;
  rep.order = order;
  rep.seed = options.seed;
  rep.columns = {"c2", "c1^2", "chi(O)", "c1.K", "K^2"};
  std::vector<std::vector<long>> exps;
  std::vector<Series> logs;
  for (const auto& row : panel.rows) {
    ExtractionRow out{row.surface.name, format_class(row.alpha), {}, {}};
    for (long e : row.exponents()) out.exponents.emplace_back(e);
    for (int n = 0; n <= order; ++n) out.integrals.push_back(segre_integral(row.surface, row.alpha, n, options));
    logs.push_back(log(Series(Var::z, out.integrals)));
    exps.push_back(row.exponents());
    rep.rows.push_back(std::move(out));
  }
  std::vector<Series> a = solve_log_systems(to_matrix(exps, 5), logs, order, Var::z);
  for (int i = 0; i < 5; ++i) {
    std::string status;
    std::optional<Series> ref = catalog_series(Family::segreA, s, i, std::max(order, 1), status);
    if (ref) ref = ref->truncate(order);
    rep.series.push_back(compare("A" + std::to_string(i), a[static_cast<std::size_t>(i)], ref, status));
  }
  return rep;
}

ExtractionReport predict_unknown(int s, int order, const OracleOptions& options) {
  ExtractionReport rep = extract_universal(s, order, build_panel(s), options);
  for (auto& c : rep.series) {
    if (!c.reference) {
      c.reference_status = "none";
      rep.notes.push_back(c.name + " at rank " + std::to_string(s) + " has no closed form; coefficients are data");
    } else if (c.reference_status == "conjectural") {
      rep.notes.push_back(c.name + " agrees with the conjectural closed form through order " +
                          std::to_string(c.agreement_order));
    }
  }
  return rep;
}

std::vector<BigRational> VerlindeRow::exponents() const {
  return {BigRational(numerics.chiL), BigRational(numerics.chiO),
          BigRational(numerics.c1K) - BigRational(numerics.Ksq) / 2, BigRational(numerics.Ksq)};
}

std::vector<VerlindeRow> build_verlinde_panel(int size) {
  if (size < 4) throw Error(ErrorCode::invalid_argument, "Verlinde panel size must be at least 4");
  std::mt19937_64 rng(0x5eed1000ULL);
  std::uniform_int_distribution<long> coord(-1, 2);
  const auto& surfaces = panel_surfaces();
  std::vector<VerlindeRow> rows;
  auto rank_of = [](const std::vector<VerlindeRow>& rs) {
    Matrix m;
    for (const auto& r : rs) m.push_back(r.exponents());
    return m.empty() ? 0L : matrix_rank(m);
  };
  std::vector<VerlindeRow> spare;
  for (int attempt = 0; attempt < 60 && static_cast<int>(rows.size()) < size; ++attempt) {
    const ToricSurface& surf = surfaces[static_cast<std::size_t>(attempt) % surfaces.size()];
    std::vector<long> c(surf.rank());
    for (auto& x : c) x = coord(rng);
    const LineBundle l{c, {}};
    VerlindeRow row{surf, l, class_numerics(surf, EqKClass{{{1, l}}})};
    const long before = rank_of(rows);
    rows.push_back(row);
    if (rank_of(rows) == before && before < 4) {
      rows.pop_back();
      spare.push_back(std::move(row));
    }
  }
  while (static_cast<int>(rows.size()) < size && !spare.empty()) {
    rows.push_back(std::move(spare.back()));
    spare.pop_back();
  }
  if (rank_of(rows) < 4) throw Error(ErrorCode::panel, "Verlinde exponent matrix does not reach rank 4");
  return rows;
}

ExtractionReport extract_verlinde(int r, int order, const OracleOptions& options) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "order must be non-negative");
  ExtractionReport rep;
  rep.kind = "verlinde";
  rep.rank = r;
  rep.order = order;
  rep.seed = options.seed;
  rep.columns = {"chi(L)", "chi(O)", "c1.K-K^2/2", "K^2"};
  Matrix exps;
  std::vector<Series> logs;
  for (const auto& row : build_verlinde_panel()) {
    const EqKClass alpha{{{1, row.line}}};
    ExtractionRow out{row.surface.name, format_class(alpha), row.exponents(), {}};
    for (int n = 0; n <= order; ++n) out.integrals.emplace_back(verlinde_chi(row.surface, row.line, r, n, options));
    logs.push_back(log(Series(Var::w, out.integrals)));
    exps.push_back(row.exponents());
    rep.rows.push_back(std::move(out));
  }
  std::vector<Series> b = solve_log_systems(exps, logs, order, Var::w);
  for (int i = 0; i < 4; ++i) {
    std::string status;
    std::optional<Series> ref = catalog_series(Family::verlindeB, r, i + 1, std::max(order, 1), status);
    if (ref) ref = ref->truncate(order);
    rep.series.push_back(compare("B" + std::to_string(i + 1), b[static_cast<std::size_t>(i)], ref, status));
  }
  return rep;
}

Series verlinde_predicted(int r, const std::vector<BigRational>& exponents, int order) {
  if (exponents.size() != 4) throw Error(ErrorCode::invalid_argument, "verlinde_predicted needs four exponents");
  Series out = Series::one(Var::w, order);
  for (int i = 0; i < 4; ++i) {
    if (exponents[static_cast<std::size_t>(i)] == 0) continue;
    const Series b = verlinde_B(r, i + 1, order).series;
    out = mul(out, pow_rational(b, exponents[static_cast<std::size_t>(i)]));
  }
  return out;
}

nlohmann::ordered_json extraction_report_to_json(const ExtractionReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j[r.kind == "segre" ? "rank" : "r"] = r.rank;
  j["order"] = r.order;
  j["seed"] = r.seed;
  j["columns"] = r.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["surface"] = row.surface;
    o["class"] = row.alpha;
    o["exponents"] = rationals(row.exponents);
    o["integrals"] = rationals(row.integrals);
    rows.push_back(o);
  }
  j["panel"] = rows;
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (const auto& c : r.series) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["extracted"] = series_to_json(c.extracted);
    o["reference_status"] = c.reference_status;
    if (c.reference) {
      o["reference"] = series_to_json(*c.reference);
      o["agreement_order"] = c.agreement_order;
      o["matches"] = c.matches();
    }
    series.push_back(o);
  }
  j["series"] = series;
  j["notes"] = r.notes;
  return j;
}

}  // namespace hilbtaut
