#include "hilbtaut/universal.hpp"

#include <string>

#include "hilbtaut/error.hpp"

namespace hilbtaut {

namespace {

// 1 + c t
Series lin(const BigRational& c, int order) {
  return Series::from_polynomial(Var::t, order, {BigRational(1), c});
}

Series pw(const Series& base, const BigRational& e) { return pow_rational(base, e); }

Series pw(const Series& base, long num, long den) { return pow_rational(base, rational(num, den)); }

Series one(int order) { return Series::one(Var::t, order); }

ChangeOfVariable make_change(Series forward, Var natural) {
  forward = forward.relabel(Var::t);
  Series inverse = forward.order() >= 1 ? revert(forward) : Series::zero(Var::t, 0);
  return {forward, inverse.relabel(natural)};
}

Series to_natural(const Series& in_t, const ChangeOfVariable& cov) { return compose(in_t, cov.inverse); }

// y/t and y' from y computed one order higher.
struct QuarticParts {
  Series y;
  Series y_over_t;
  Series dy;
};

QuarticParts quartic_parts(const BiSeries& relation, int order) {
  const Series y_hi = solve_algebraic(relation, order + 1, Var::t);
  return {y_hi.truncate(order), div_by_var(y_hi, 1), derivative(y_hi)};
}

Series verlinde_B34_positive(int r, int index, int order) {
  if (r == 0 || r == 1) return one(order);
  if (r == 2) {
    const Series half = (pw(lin(4, order), 1, 2) + BigRational(1)) * rational(1, 2);
    if (index == 3) return divide(half, lin(1, order));
    return pw(lin(1, order), 1, 2) * pw(lin(4, order), 1, 2) * pw(half, -5, 2);
  }
  if (r == 3) {
    const QuarticParts Y = quartic_parts(Y_relation(), order);
    if (index == 3) return pw(lin(1, order), -3, 2) * pw(Y.y_over_t, -1, 2);
    const Series one_plus = Y.y + BigRational(1);
    const Series one_minus = BigRational(1) - Y.y;
    return pw(lin(1, order), 3, 4) * pw(Y.y_over_t, 13, 4) * mul(one_plus, one_plus) *
           divide(inverse(one_minus), Y.dy);
  }
  throw Error(ErrorCode::unknown_series, "B" + std::to_string(index) + " has no closed form at r=" + std::to_string(r));
}

// B3, B4 in the Verlinde t variable for |r| <= 3.
Series verlinde_B34_in_t(int r, int index, int order) {
  const Series b = verlinde_B34_positive(r < 0 ? -r : r, index, order);
  if (r < 0 && index == 3) return inverse(b);
  return b;
}

Series segre_A34_in_t(int s, int index, int order);

// Ranks -3 and -4: invert the Segre to Verlinde rule at r' = s + 1 using the
// Verlinde series at r' obtained by symmetry from r = -r'.
Series segre_A34_negative(int s, int index, int order) {
  const int rp = s + 1;
  const Series b3 = verlinde_B34_in_t(rp, 3, order);
  const Series a3 = b3 * pw(lin(1, order), rational(rp, 2)) * pw(lin(-rp, order), 1, 2);
  Series target = a3;
  if (index == 4) {
    const Series b4 = verlinde_B34_in_t(rp, 4, order);
    target = b4 * pw(a3, 1, 2) * pw(lin(1, order), rational(-rp, 4)) * pw(lin(-rp, order), -1, 4);
  }
  // t' = tau / (1 + r' tau)
  const Series t_of_tau = shift_up(inverse(lin(rp, order)), 1);
  return compose(target, t_of_tau);
}

Series segre_A34_in_t(int s, int index, int order) {
  switch (s) {
    case 1: {
      const Series root2 = pw(lin(2, order), 1, 2);
      const Series root6 = pw(lin(6, order), 1, 2);
      const Series sum = root2 + root6;
      if (index == 3) return pw(lin(2, order), -1, 1) * sum * rational(1, 2);
      return root2 * root6 * inverse(mul(sum, sum)) * BigRational(4);
    }
    case 2: {
      const QuarticParts y = quartic_parts(y_relation(), order);
      if (index == 3) return pw(lin(3, order), -1, 1) * pw(y.y_over_t, -1, 2);
      const Series one_plus = y.y + BigRational(1);
      const Series one_minus = BigRational(1) - y.y;
      return lin(3, order) * pow_int(y.y_over_t, 3) * mul(one_plus, one_plus) * divide(inverse(one_minus), y.dy);
    }
    case 0:
      if (index == 3) return pw(lin(1, order), -1, 1) * pw(lin(2, order), 1, 2);
      return one(order);
    case -1:
    case -2:
      return one(order);
    case -3:
    case -4:
      return segre_A34_negative(s, index, order);
    default:
      break;
  }
  throw Error(ErrorCode::unknown_series,
              "A" + std::to_string(index) + " is not known in closed form at rank " + std::to_string(s));
}

Status segre_status(int s, int index) {
  if (index <= 2) return Status::proven;
  if (s == 1 || s == 2) return Status::proven;
  if (s == 0) return index == 3 ? Status::conjectural : Status::trivial;
  if (s == -1 || s == -2) return Status::trivial;
  return Status::conjectural;
}

Status verlinde_status(int r, int index) {
  if (index <= 2) return Status::proven;
  if (r >= -1 && r <= 1) return Status::trivial;
  return Status::conjectural;
}

void check_order(int order) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "negative truncation order");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::segreA: return "segreA";
    case Family::chernA: return "chernA";
    case Family::verlindeB: return "verlindeB";
    case Family::y_quartic: return "y";
    case Family::Y_quartic: return "Y";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::segreA, Family::chernA, Family::verlindeB, Family::y_quartic, Family::Y_quartic}) {
    if (family_name(f) == name) return f;
  }
  throw Error(ErrorCode::unknown_series, "unknown series family '" + std::string(name) + "'");
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::proven: return "proven";
    case Status::conjectural: return "conjectural";
    case Status::trivial: return "trivial";
  }
  return "unknown";
}

std::string_view convention_name(RankConvention c) {
  switch (c) {
    case RankConvention::segre: return "r=s+1";
    case RankConvention::chern: return "r=s-1";
    case RankConvention::verlinde: return "r=twist";
    case RankConvention::none: return "none";
  }
  return "none";
}

ChangeOfVariable segre_change_of_var(int r, int order) {
  check_order(order);
  return make_change(shift_up(pow_int(lin(r, order), r), 1), Var::z);
}

ChangeOfVariable chern_change_of_var(int r, int order) {
  check_order(order);
  return make_change(shift_up(pow_int(lin(-r, order), -r), 1), Var::z);
}

ChangeOfVariable verlinde_change_of_var(int r, int order) {
  check_order(order);
  return make_change(shift_up(pow_int(lin(1, order), static_cast<long>(r) * r - 1), 1), Var::w);
}

BiSeries y_relation() {
  // -t + y(1+4t) + y^2(2+6t) + y^3(1+4t) - t y^4
  return BiSeries::from_terms(Var::y, Var::t, 4, 1,
                              {{0, 1, -1}, {1, 0, 1}, {1, 1, 4}, {2, 0, 2}, {2, 1, 6}, {3, 0, 1}, {3, 1, 4}, {4, 1, -1}});
}

BiSeries Y_relation() {
  // -t + y(1+t) + 2y^2 + y^3(1+t) - t y^4
  return BiSeries::from_terms(Var::y, Var::t, 4, 1,
                              {{0, 1, -1}, {1, 0, 1}, {1, 1, 1}, {2, 0, 2}, {3, 0, 1}, {3, 1, 1}, {4, 1, -1}});
}

Series y_series(int order) { return solve_algebraic(y_relation(), order, Var::t); }

Series Y_series(int order) { return solve_algebraic(Y_relation(), order, Var::t); }

CatalogEntry segre_A(int s, int index, int order) {
  check_order(order);
  if (index < 0 || index > 4) throw Error(ErrorCode::invalid_argument, "Segre index must be 0..4");
  const int r = s + 1;
  Series in_t;
  if (index == 0) {
    in_t = pow_int(lin(r, order), -r) * pow_int(lin(1 + r, order), r - 1);
  } else if (index == 1) {
    in_t = pw(lin(r, order), rational(r - 1, 2)) * pw(lin(1 + r, order), rational(2 - r, 2));
  } else if (index == 2) {
    in_t = pw(lin(r, order), rational(static_cast<long>(r) * r - 1, 2)) *
           pw(lin(1 + r, order), rational(-static_cast<long>(r) * r + 2 * r, 2)) *
           pw(lin(static_cast<long>(r) * (1 + r), order), -1, 2);
  } else {
    in_t = segre_A34_in_t(s, index, order);
  }
  const ChangeOfVariable cov = segre_change_of_var(r, order);
  return {Family::segreA, index, s, r, RankConvention::segre, segre_status(s, index), to_natural(in_t, cov),
          cov.forward, in_t};
}

CatalogEntry chern_A(int s, int index, int order) {
  check_order(order);
  if (index < 0 || index > 2) throw Error(ErrorCode::invalid_argument, "Chern index must be 0..2");
  const long r = s - 1;
  Series in_t;
  if (index == 0) {
    in_t = pow_int(lin(-r, order), -r) * pow_int(lin(1 - r, order), r + 1);
  } else if (index == 1) {
    in_t = pw(lin(-r, order), rational(r - 1, 2)) * pw(lin(1 - r, order), rational(-r, 2));
  } else {
    in_t = pw(lin(r * r - r, order), -1, 2) * pw(lin(-r, order), rational(r * r - 1, 2)) *
           pw(lin(1 - r, order), rational(-r * r - 2 * r, 2));
  }
  const ChangeOfVariable cov = chern_change_of_var(static_cast<int>(r), order);
  return {Family::chernA, index, s, static_cast<int>(r), RankConvention::chern, Status::proven,
          to_natural(in_t, cov), cov.forward, in_t};
}

CatalogEntry verlinde_B(int r, int index, int order) {
  check_order(order);
  if (index < 1 || index > 4) throw Error(ErrorCode::invalid_argument, "Verlinde index must be 1..4");
  Series in_t;
  if (index == 1) {
    in_t = lin(1, order);
  } else if (index == 2) {
    const long rr = static_cast<long>(r) * r;
    in_t = pw(lin(1, order), rational(rr, 2)) * pw(lin(rr, order), -1, 2);
  } else {
    if (r < -3 || r > 3) {
      throw Error(ErrorCode::unknown_series,
                  "B" + std::to_string(index) + " is not known in closed form at r=" + std::to_string(r));
    }
    in_t = verlinde_B34_in_t(r, index, order);
  }
  const ChangeOfVariable cov = verlinde_change_of_var(r, order);
  return {Family::verlindeB, index, r, r, RankConvention::verlinde, verlinde_status(r, index),
          to_natural(in_t, cov), cov.forward, in_t};
}

Series segre_full(int s, const SegreExponents& e, int order, bool allow_conjectural) {
  check_order(order);
  const long exps[5] = {e.c2, e.c1sq, e.chiO, e.c1K, e.Ksq};
  Series out = Series::one(Var::z, order);
  for (int i = 0; i < 5; ++i) {
    if (exps[i] == 0) continue;
    const CatalogEntry a = segre_A(s, i, order);
    if (a.status == Status::conjectural && !allow_conjectural) {
      throw Error(ErrorCode::unknown_series,
                  "A" + std::to_string(i) + " at rank " + std::to_string(s) + " is only conjectural");
    }
    out = mul(out, pow_int(a.series, exps[i]));
  }
  return out;
}

Series chern_full(int s, long c2, long c1sq, long chiO, int order) {
  check_order(order);
  const long exps[3] = {c2, c1sq, chiO};
  Series out = Series::one(Var::z, order);
  for (int i = 0; i < 3; ++i) {
    if (exps[i] != 0) out = mul(out, pow_int(chern_A(s, i, order).series, exps[i]));
  }
  return out;
}

Series verlinde_full(int r, const VerlindeExponents& e, int order, bool allow_conjectural) {
  check_order(order);
  if ((2 * e.c1K - e.Ksq) % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "B3 exponent c1K - Ksq/2 is not an integer");
  }
  const long exps[4] = {e.chiL, e.chiO, e.c1K - e.Ksq / 2, e.Ksq};
  Series out = Series::one(Var::w, order);
  for (int i = 0; i < 4; ++i) {
    if (exps[i] == 0) continue;
    const CatalogEntry b = verlinde_B(r, i + 1, order);
    if (b.status == Status::conjectural && !allow_conjectural) {
      throw Error(ErrorCode::unknown_series,
                  "B" + std::to_string(i + 1) + " at r=" + std::to_string(r) + " is only conjectural");
    }
    out = mul(out, pow_int(b.series, exps[i]));
  }
  return out;
}

SegreVerlindeVars segre_verlinde_vars(int r, int order) {
  if (order < 1) throw Error(ErrorCode::invalid_argument, "change of variables needs order >= 1");
  const long rr = static_cast<long>(r) * r;
  Series z = shift_up(pow_int(lin(-r, order), -r), 1);
  Series w = shift_up(pow_int(lin(-(r - 1), order), rr - 1) * pow_int(lin(-r, order), -rr), 1);
  return {z, w};
}

std::pair<Series, Series> verlinde_B34_from_segre(int r, int order) {
  check_order(order);
  if (r < -1 || r > 3) {
    throw Error(ErrorCode::unknown_series, "no closed-form Segre input for r=" + std::to_string(r));
  }
  const int s = r - 1;
  const Series tau = shift_up(inverse(lin(-r, order)), 1);
  const Series a3 = compose(segre_A34_in_t(s, 3, order), tau);
  const Series a4 = compose(segre_A34_in_t(s, 4, order), tau);
  const Series b3 = a3 * pw(lin(1, order), rational(-r, 2)) * pw(lin(-r, order), -1, 2);
  const Series b4 = a4 * pw(a3, -1, 2) * pw(lin(1, order), rational(r, 4)) * pw(lin(-r, order), 1, 4);
  return {b3, b4};
}

std::vector<CatalogListing> catalog_listing() {
  std::vector<CatalogListing> out;
  for (int index = 3; index <= 4; ++index) {
    for (int s = -4; s <= 2; ++s) out.push_back({Family::segreA, s, index, segre_status(s, index)});
  }
  for (int index = 3; index <= 4; ++index) {
    for (int r = -3; r <= 3; ++r) out.push_back({Family::verlindeB, r, index, verlinde_status(r, index)});
  }
  return out;
}

}  // namespace hilbtaut
