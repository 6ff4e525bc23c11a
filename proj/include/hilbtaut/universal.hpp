#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbtaut/biseries.hpp"
#include "hilbtaut/series.hpp"

namespace hilbtaut {

enum class Family { segreA, chernA, verlindeB, y_quartic, Y_quartic };
enum class Status { proven, conjectural, trivial };

/// How the integer r attached to an entry was obtained from the rank s.
enum class RankConvention {
  segre,     // r = s + 1
  chern,     // r = s - 1
  verlinde,  // r is the twist exponent of E^r
  none,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
std::string_view status_name(Status s);
std::string_view convention_name(RankConvention c);

struct CatalogEntry {
  Family family;
  int index = 0;
  int rank = 0;  // s for Segre/Chern entries, r for Verlinde entries
  int r = 0;
  RankConvention convention = RankConvention::none;
  Status status = Status::proven;
  Series series;              // in the natural variable (z or w; t for y and Y)
  Series change_of_variable;  // z(t) or w(t)
  Series in_t;                // the closed form before composing with t(z)
};

struct ChangeOfVariable {
  Series forward;  // natural variable as a series in t
  Series inverse;  // t as a series in the natural variable
};

/// z = t (1 + r t)^r and its reversion.
ChangeOfVariable segre_change_of_var(int r, int order);
/// z = t (1 - r t)^{-r}.
ChangeOfVariable chern_change_of_var(int r, int order);
/// w = t (1 + t)^{r^2 - 1}.
ChangeOfVariable verlinde_change_of_var(int r, int order);

/// y(1+y)^2(1+3t) - t(1-y)(1-y^3) as a polynomial in (y, t).
BiSeries y_relation();
/// y(1+y)^2 - t(1-y)(1-y^3).
BiSeries Y_relation();
Series y_series(int order);
Series Y_series(int order);

CatalogEntry segre_A(int s, int index, int order);
CatalogEntry chern_A(int s, int index, int order);
CatalogEntry verlinde_B(int r, int index, int order);

struct SegreExponents {
  long c2 = 0;
  long c1sq = 0;
  long chiO = 0;
  long c1K = 0;
  long Ksq = 0;
};

struct VerlindeExponents {
  long chiL = 0;
  long chiO = 0;
  long c1K = 0;
  long Ksq = 0;
};

/// A0^c2 A1^c1sq A2^chiO A3^c1K A4^Ksq in z. Conjectural factors are refused
/// (Error unknown_series) unless allow_conjectural is set.
Series segre_full(int s, const SegreExponents& e, int order, bool allow_conjectural = false);
/// Chern generating series A~0^c2 A~1^c1sq A~2^chiO (K-trivial surfaces only).
Series chern_full(int s, long c2, long c1sq, long chiO, int order);
/// B1^chiL B2^chiO B3^{c1K - Ksq/2} B4^Ksq in w.
Series verlinde_full(int r, const VerlindeExponents& e, int order, bool allow_conjectural = false);

struct SegreVerlindeVars {
  Series z_of_t;  // t (1 - r t)^{-r}
  Series w_of_t;  // t (1 - (r-1) t)^{r^2-1} (1 - r t)^{-r^2}
};
SegreVerlindeVars segre_verlinde_vars(int r, int order);

/// Verlinde B3, B4 predicted from rank s = r - 1 Segre A3, A4, as series in
/// the Verlinde t-variable:
///   B3 = A3(tau) (1+t)^{-r/2} (1-rt)^{-1/2},
///   B4 = A4(tau) A3(tau)^{-1/2} (1+t)^{r/4} (1-rt)^{1/4},  tau = t/(1-rt).
/// Only ranks with a closed-form A3/A4 in t are accepted.
std::pair<Series, Series> verlinde_B34_from_segre(int r, int order);

struct CatalogListing {
  Family family;
  int rank;
  int index;
  Status status;
};
/// Entries with a closed form at fixed rank, plus a marker for the families
/// defined at every rank (rank field ignored there).
std::vector<CatalogListing> catalog_listing();

}  // namespace hilbtaut
