#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hilbtaut/rational.hpp"
#include "hilbtaut/series.hpp"

namespace hilbtaut {

struct CheckReport {
  std::string name;
  std::string swept;  // parameter ranges covered
  bool passed = true;
  long cases = 0;
  /// First failing parameter tuple, as (key, value) pairs. Empty on pass.
  std::vector<std::pair<std::string, std::string>> counterexample;
  /// Degree bound in the swept variable for polynomial identities; -1 if not applicable.
  int degree_bound = -1;
  /// "identity" for exact checks of proven statements, "conjecture-consistency"
  /// when the entries involved are only conjectural.
  std::string grade = "identity";
  std::vector<std::string> notes;

  /// Counts a case; on the first failure records the counterexample.
  void expect(bool ok, std::vector<std::pair<std::string, std::string>> where);
};

nlohmann::ordered_json report_to_json(const CheckReport& r);

/// [t^n] (1+(1+r)t)^d (1+rt)^{-d+chi-rn}.
BigRational residue_coeff(long d, long chi, long r, long n);

CheckReport check_thm3(int r, int n_max, long chi_lo, long chi_hi);
/// Printed z^2 polynomial vs segre_full on K3 numerics at a single point.
CheckReport check_2pt(int s, long c1sq, long c2);
CheckReport check_asymptotics(int r);
CheckReport check_chern_rank2(int order, long c2_lo, long c2_hi);
CheckReport check_spherical_chern(int s, int n_max, long chi_lo, long chi_hi);
CheckReport check_abelian(int r, int n_max, long chi_lo, long chi_hi);
CheckReport check_enriques(int r, int n_max, long chi_lo, long chi_hi, int form_order);
/// [h^{2n} zeta^n] (1-zeta)^{3n+2} / (1-h-zeta)^2.
BigRational blowup_excess(int n);
CheckReport check_blowup_excess(int n_max);
CheckReport check_theta_constant(int n, int box_radius);
CheckReport check_fgh_derivation(int order);
CheckReport check_lagrange_burmann(const Series& f, const Series& g, int order);
CheckReport check_verlinde_trivial(int order, long chi_lo, long chi_hi);
CheckReport check_verlinde_segre_prediction(int order);

struct SuiteOptions {
  int order = 10;
  std::uint64_t seed = 20240601;
  int random_cases = 50;
};

/// Named suites, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Runs one named suite (or every suite for "all"); Error(invalid_argument) on an unknown name.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace hilbtaut
