#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbtaut/linsolve.hpp"
#include "hilbtaut/oracle.hpp"
#include "hilbtaut/series.hpp"
#include "hilbtaut/toric.hpp"

namespace hilbtaut {

struct PanelRow {
  ToricSurface surface;
  EqKClass alpha;
  ClassNumerics numerics;
  /// (c2, c1^2, chi(O), c1.K, K^2)
  std::vector<long> exponents() const;
};

struct GeometryPanel {
  int s = 0;
  std::vector<PanelRow> rows;
};

/// Checks the exponent matrix has rank 5 (rank 3 over (c2, c1^2, chi(O)) when
/// k_trivial_only); Error(panel) otherwise.
GeometryPanel make_panel(int s, std::vector<PanelRow> rows, bool k_trivial_only = false);

/// Rank-s K-classes over P2, P1xP1 and F1, greedily chosen so the exponent
/// matrix reaches rank 5, then padded with redundant rows up to `size`.
GeometryPanel build_panel(int s, int size = 7);

struct SeriesComparison {
  std::string name;  // "A0".."A4", "B1".."B4"
  Series extracted;
  std::optional<Series> reference;
  std::string reference_status;  // proven / conjectural / trivial / none
  /// Largest k with coefficients 0..k equal; -1 when the constants differ.
  int agreement_order = -1;
  bool matches() const { return reference && agreement_order == extracted.order(); }
};

/// Largest k such that a and b agree in coefficients 0..k, capped at the shorter order.
int agreement_order(const Series& a, const Series& b);

struct ExtractionRow {
  std::string surface;
  std::string alpha;
  std::vector<BigRational> exponents;
  std::vector<BigRational> integrals;  // n = 0..order
};

struct ExtractionReport {
  std::string kind;  // segre or verlinde
  int rank = 0;      // s for Segre, r for Verlinde
  int order = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> columns;
  std::vector<ExtractionRow> rows;
  std::vector<SeriesComparison> series;
  std::vector<std::string> notes;
};

nlohmann::ordered_json extraction_report_to_json(const ExtractionReport& r);

/// Solves the log-coefficient systems order by order; Error(universality_violation)
/// when redundant rows disagree. Returns A0..A4 in z, compared with the catalog.
ExtractionReport extract_universal(int s, int order, const GeometryPanel& panel, const OracleOptions& options = {});

/// Extraction at rank s with the unknown A3/A4 confronted with whatever the
/// catalog has (conjectural entries included); entries without a reference are
/// reported as data.
ExtractionReport predict_unknown(int s, int order, const OracleOptions& options = {});

struct VerlindeRow {
  ToricSurface surface;
  LineBundle line;
  ClassNumerics numerics;
  /// (chi(L), chi(O), c1.K - K^2/2, K^2)
  std::vector<BigRational> exponents() const;
};

/// Line bundles over the three surfaces with a rank-4 exponent matrix.
std::vector<VerlindeRow> build_verlinde_panel(int size = 6);

/// Recovers B1..B4 in w from verlinde_chi rows and compares with the catalog.
ExtractionReport extract_verlinde(int r, int order, const OracleOptions& options = {});

/// B1^chiL B2^chiO B3^{c1K - K^2/2} B4^{K^2} with rational exponents allowed.
Series verlinde_predicted(int r, const std::vector<BigRational>& exponents, int order);

}  // namespace hilbtaut
