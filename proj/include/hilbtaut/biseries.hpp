#pragma once

#include <utility>
#include <vector>

#include "hilbtaut/rational.hpp"
#include "hilbtaut/series.hpp"

namespace hilbtaut {

/// Dense bivariate truncated series sum_{i<=d1, j<=d2} c_{ij} x1^i x2^j.
/// Truncation is independent in each variable.
class BiSeries {
 public:
  BiSeries(Var v1, Var v2, int d1, int d2);

  static BiSeries constant(Var v1, Var v2, int d1, int d2, const BigRational& c);
  /// Sum of c * x1^i * x2^j terms given as (i, j, c); terms outside the box are dropped.
  struct Term {
    int i;
    int j;
    BigRational c;
  };
  static BiSeries from_terms(Var v1, Var v2, int d1, int d2, const std::vector<Term>& terms);

  int degree1() const { return d1_; }
  int degree2() const { return d2_; }
  std::pair<Var, Var> vars() const { return {v1_, v2_}; }

  /// Throws Error(range) outside the box.
  const BigRational& coeff(int i, int j) const;
  void set(int i, int j, const BigRational& c);

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.c_ == b.c_;
  }

  /// Partial derivative in x1 (degree d1 drops by one, floor 0).
  BiSeries derivative1() const;
  /// Row i as a series in x2.
  Series row(int i) const;

 private:
  void check_shape(const BiSeries& other) const;
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (d2_ + 1) + j; }

  Var v1_;
  Var v2_;
  int d1_;
  int d2_;
  std::vector<BigRational> c_;
};

BiSeries pow_int(const BiSeries& a, long e);
/// Requires a nonzero constant term.
BiSeries inverse(const BiSeries& a);
/// The (i, j) coefficient; Error(range) when outside the box.
BigRational bicoeff(const BiSeries& f, int i, int j);

}  // namespace hilbtaut
