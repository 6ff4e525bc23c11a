#include "hilbtaut/biseries.hpp"

#include <string>

#include "hilbtaut/error.hpp"

namespace hilbtaut {

BiSeries::BiSeries(Var v1, Var v2, int d1, int d2) : v1_(v1), v2_(v2), d1_(d1), d2_(d2) {
  if (d1 < 0 || d2 < 0) throw Error(ErrorCode::invalid_argument, "negative bivariate truncation degree");
  c_.resize(static_cast<std::size_t>(d1 + 1) * (d2 + 1));
}

BiSeries BiSeries::constant(Var v1, Var v2, int d1, int d2, const BigRational& c) {
  BiSeries out(v1, v2, d1, d2);
  out.c_[0] = c;
  return out;
}

BiSeries BiSeries::from_terms(Var v1, Var v2, int d1, int d2, const std::vector<Term>& terms) {
  BiSeries out(v1, v2, d1, d2);
  for (const auto& term : terms) {
    if (term.i < 0 || term.j < 0) throw Error(ErrorCode::invalid_argument, "negative exponent in bivariate term");
    if (term.i <= d1 && term.j <= d2) out.c_[out.index(term.i, term.j)] += term.c;
  }
  return out;
}

const BigRational& BiSeries::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > d1_ || j > d2_) {
    throw Error(ErrorCode::range, "bivariate coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") outside (" + std::to_string(d1_) + "," + std::to_string(d2_) + ")");
  }
  return c_[index(i, j)];
}

void BiSeries::set(int i, int j, const BigRational& c) {
  coeff(i, j);
  c_[index(i, j)] = c;
}

void BiSeries::check_shape(const BiSeries& other) const {
  if (d1_ != other.d1_ || d2_ != other.d2_) {
    throw Error(ErrorCode::order_mismatch, "bivariate truncation degrees differ");
  }
}

BiSeries BiSeries::operator-() const {
  BiSeries out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  a.check_shape(b);
  BiSeries out = a;
  for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] += b.c_[k];
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.check_shape(b);
  BiSeries out(a.v1_, a.v2_, a.d1_, a.d2_);
  for (int i1 = 0; i1 <= a.d1_; ++i1) {
    for (int j1 = 0; j1 <= a.d2_; ++j1) {
      const BigRational& x = a.c_[a.index(i1, j1)];
      if (x == 0) continue;
      for (int i2 = 0; i1 + i2 <= a.d1_; ++i2) {
        for (int j2 = 0; j1 + j2 <= a.d2_; ++j2) {
          const BigRational& y = b.c_[b.index(i2, j2)];
          if (y != 0) out.c_[out.index(i1 + i2, j1 + j2)] += x * y;
        }
      }
    }
  }
  return out;
}

BiSeries BiSeries::derivative1() const {
  const int nd1 = d1_ > 0 ? d1_ - 1 : 0;
  BiSeries out(v1_, v2_, nd1, d2_);
  for (int i = 1; i <= d1_; ++i) {
    for (int j = 0; j <= d2_; ++j) out.c_[out.index(i - 1, j)] = c_[index(i, j)] * i;
  }
  return out;
}

Series BiSeries::row(int i) const {
  std::vector<BigRational> r(static_cast<std::size_t>(d2_) + 1);
  for (int j = 0; j <= d2_; ++j) r[j] = coeff(i, j);
  return Series(v2_, std::move(r));
}

BiSeries pow_int(const BiSeries& a, long e) {
  if (e < 0) return pow_int(inverse(a), -e);
  const auto [v1, v2] = a.vars();
  BiSeries out = BiSeries::constant(v1, v2, a.degree1(), a.degree2(), 1);
  BiSeries base = a;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

BiSeries inverse(const BiSeries& a) {
  const BigRational a00 = a.coeff(0, 0);
  if (a00 == 0) throw Error(ErrorCode::domain, "inverse of a bivariate series with zero constant term");
  const auto [v1, v2] = a.vars();
  const int d1 = a.degree1();
  const int d2 = a.degree2();
  BiSeries b(v1, v2, d1, d2);
  const BigRational inv = 1 / a00;
  for (int i = 0; i <= d1; ++i) {
    for (int j = 0; j <= d2; ++j) {
      if (i == 0 && j == 0) {
        b.set(0, 0, inv);
        continue;
      }
      BigRational acc = 0;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          const BigRational& x = a.coeff(k, l);
          if (x != 0) acc += x * b.coeff(i - k, j - l);
        }
      }
      b.set(i, j, -acc * inv);
    }
  }
  return b;
}

BigRational bicoeff(const BiSeries& f, int i, int j) { return f.coeff(i, j); }

}  // namespace hilbtaut
