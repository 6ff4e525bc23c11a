#pragma once

#include <string_view>
#include <vector>

#include "hilbtaut/rational.hpp"

namespace hilbtaut {

/// Label for the formal variable. Only used for display and error messages;
/// arithmetic never looks at it.
enum class Var { z, t, w, u, q, y, h, zeta, x };

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
/// The coefficient vector always has exactly order()+1 entries.
class Series {
 public:
  Series() : Series(Var::x, std::vector<BigRational>{BigRational(0)}) {}
  Series(Var var, std::vector<BigRational> coefficients);

  static Series zero(Var var, int order);
  static Series constant(Var var, int order, const BigRational& c);
  static Series one(Var var, int order) { return constant(var, order, 1); }
  /// The series x itself (requires order >= 1 to be non-trivial).
  static Series variable(Var var, int order);
  /// Pads with zeros or truncates `coefficients` to the requested order.
  static Series from_polynomial(Var var, int order, const std::vector<BigRational>& coefficients);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Var var() const { return var_; }
  const std::vector<BigRational>& coefficients() const { return c_; }
  const BigRational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  /// Coefficient of x^k, zero beyond the stored range; throws Error(range) above order().
  BigRational coeff(int k) const;

  Series truncate(int order) const;
  Series relabel(Var var) const;
  bool is_zero() const;

  Series operator-() const;
  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const BigRational& c);

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  Var var_;
  std::vector<BigRational> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(Series a, const BigRational& c);
Series operator*(const BigRational& c, Series a);
Series operator+(Series a, const BigRational& c);
Series operator-(Series a, const BigRational& c);
Series operator+(const BigRational& c, Series a);
Series operator-(const BigRational& c, const Series& a);

/// Truncated Cauchy product. Orders must match.
Series mul(const Series& a, const Series& b);
/// 1/a; constant term must be nonzero.
Series inverse(const Series& a);
Series divide(const Series& a, const Series& b);
Series pow_int(const Series& a, long e);
/// a^e = exp(e log a); constant term of a must be 1.
Series pow_rational(const Series& a, const BigRational& e);
/// Constant term must be 1.
Series log(const Series& a);
/// Constant term must be 0.
Series exp(const Series& a);
/// outer(inner(x)); inner(0) must be 0 and the orders must match.
Series compose(const Series& outer, const Series& inner);
/// Compositional inverse by Newton iteration; a(0) = 0, a'(0) != 0.
Series revert(const Series& a);
/// Termwise derivative; the result has order one less (order 0 stays 0).
Series derivative(const Series& a);
/// a / x^k when the first k coefficients vanish; the result has order order()-k.
Series div_by_var(const Series& a, int k);
/// x^k a, keeping the order.
Series shift_up(const Series& a, int k);

class BiSeries;

/// The series y(t) with y(0) = 0 and P(y(t), t) = 0, where relation(i, j) is
/// the coefficient of y^i t^j. Requires P(0,0) = 0 and dP/dy(0,0) != 0.
Series solve_algebraic(const BiSeries& relation, int order, Var var = Var::t);

/// P(y(t), t) truncated to the order of y.
Series evaluate_relation(const BiSeries& relation, const Series& y);

}  // namespace hilbtaut
