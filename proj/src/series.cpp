#include "hilbtaut/series.hpp"

#include <array>
#include <string>

#include "hilbtaut/biseries.hpp"
#include "hilbtaut/error.hpp"

namespace hilbtaut {

namespace {

constexpr std::array<std::pair<Var, std::string_view>, 9> kVarNames{{
    {Var::z, "z"},
    {Var::t, "t"},
    {Var::w, "w"},
    {Var::u, "u"},
    {Var::q, "q"},
    {Var::y, "y"},
    {Var::h, "h"},
    {Var::zeta, "zeta"},
    {Var::x, "x"},
}};

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::order_mismatch,
                std::string(op) + ": order " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
}

}  // namespace

std::string_view var_name(Var v) {
  for (const auto& [var, name] : kVarNames) {
    if (var == v) return name;
  }
  return "x";
}

Var parse_var(std::string_view name) {
  for (const auto& [var, n] : kVarNames) {
    if (n == name) return var;
  }
  throw Error(ErrorCode::parse, "unknown variable '" + std::string(name) + "'");
}

Series::Series(Var var, std::vector<BigRational> coefficients) : var_(var), c_(std::move(coefficients)) {
  if (c_.empty()) throw Error(ErrorCode::invalid_argument, "series needs at least one coefficient");
}

Series Series::zero(Var var, int order) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "negative truncation order");
  return Series(var, std::vector<BigRational>(static_cast<std::size_t>(order) + 1));
}

Series Series::constant(Var var, int order, const BigRational& c) {
  Series s = zero(var, order);
  s.c_[0] = c;
  return s;
}

Series Series::variable(Var var, int order) {
  Series s = zero(var, order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

Series Series::from_polynomial(Var var, int order, const std::vector<BigRational>& coefficients) {
  Series s = zero(var, order);
  for (std::size_t k = 0; k < coefficients.size() && k < s.c_.size(); ++k) s.c_[k] = coefficients[k];
  return s;
}

BigRational Series::coeff(int k) const {
  if (k < 0 || k > order()) {
    throw Error(ErrorCode::range, "coefficient " + std::to_string(k) + " outside order " + std::to_string(order()));
  }
  return c_[static_cast<std::size_t>(k)];
}

Series Series::truncate(int order) const {
  if (order > this->order()) {
    throw Error(ErrorCode::order_mismatch, "cannot truncate order " + std::to_string(this->order()) + " up to " +
                                               std::to_string(order));
  }
  return Series(var_, std::vector<BigRational>(c_.begin(), c_.begin() + order + 1));
}

Series Series::relabel(Var var) const {
  Series s = *this;
  s.var_ = var;
  return s;
}

bool Series::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Series& Series::operator+=(const Series& other) {
  require_same_order(*this, other, "add");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_order(*this, other, "sub");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

Series& Series::operator*=(const BigRational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(Series a, const BigRational& c) { return a *= c; }
Series operator*(const BigRational& c, Series a) { return a *= c; }

Series operator+(Series a, const BigRational& c) {
  return a + Series::constant(a.var(), a.order(), c);
}

Series operator-(Series a, const BigRational& c) {
  return a - Series::constant(a.var(), a.order(), c);
}

Series operator+(const BigRational& c, Series a) { return std::move(a) + c; }

Series operator-(const BigRational& c, const Series& a) { return (-a) + c; }

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const int n = a.order();
  std::vector<BigRational> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return Series(a.var(), std::move(out));
}

Series inverse(const Series& a) {
  if (a[0] == 0) throw Error(ErrorCode::domain, "inverse of a series with zero constant term");
  const int n = a.order();
  std::vector<BigRational> b(static_cast<std::size_t>(n) + 1);
  const BigRational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    BigRational acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return Series(a.var(), std::move(b));
}

Series divide(const Series& a, const Series& b) { return mul(a, inverse(b)); }

Series pow_int(const Series& a, long e) {
  if (e < 0) return pow_int(inverse(a), -e);
  Series out = Series::one(a.var(), a.order());
  Series base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return out;
}

Series log(const Series& a) {
  if (a[0] != 1) throw Error(ErrorCode::domain, "log needs constant term 1, got " + to_string(a[0]));
  // From a' = a L': n a_n = sum_{k=1}^{n} k L_k a_{n-k}.
  const int n = a.order();
  std::vector<BigRational> l(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (int k = 1; k < m; ++k) acc += k * l[k] * a[m - k];
    l[m] = a[m] - acc / m;
  }
  return Series(a.var(), std::move(l));
}

Series exp(const Series& a) {
  if (a[0] != 0) throw Error(ErrorCode::domain, "exp needs constant term 0, got " + to_string(a[0]));
  const int n = a.order();
  std::vector<BigRational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (int k = 1; k <= m; ++k) acc += k * a[k] * b[m - k];
    b[m] = acc / m;
  }
  return Series(a.var(), std::move(b));
}

Series pow_rational(const Series& a, const BigRational& e) {
  if (a[0] != 1) throw Error(ErrorCode::non_unit_base, "rational power needs constant term 1, got " + to_string(a[0]));
  if (e == 0) return Series::one(a.var(), a.order());
  return exp(log(a) * e);
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0) {
    throw Error(ErrorCode::composition_domain, "inner series has constant term " + to_string(inner[0]));
  }
  require_same_order(outer, inner, "compose");
  const int n = outer.order();
  Series out = Series::constant(inner.var(), n, outer[n]);
  for (int k = n - 1; k >= 0; --k) {
    out = mul(out, inner);
    out = out + outer[k];
  }
  return out;
}

Series derivative(const Series& a) {
  const int n = a.order();
  if (n == 0) return Series::zero(a.var(), 0);
  std::vector<BigRational> d(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) d[k - 1] = a[k] * k;
  return Series(a.var(), std::move(d));
}

Series div_by_var(const Series& a, int k) {
  if (k < 0 || k > a.order()) throw Error(ErrorCode::range, "cannot factor out x^" + std::to_string(k));
  for (int i = 0; i < k; ++i) {
    if (a[i] != 0) {
      throw Error(ErrorCode::domain, "coefficient of x^" + std::to_string(i) + " is nonzero, cannot divide by x^" +
                                         std::to_string(k));
    }
  }
  return Series(a.var(), std::vector<BigRational>(a.coefficients().begin() + k, a.coefficients().end()));
}

Series shift_up(const Series& a, int k) {
  std::vector<BigRational> c(static_cast<std::size_t>(a.order()) + 1);
  for (int i = 0; i + k <= a.order(); ++i) c[i + k] = a[i];
  return Series(a.var(), std::move(c));
}

namespace {

// a' padded back to the order of a. The missing top coefficient only feeds
// Newton corrections beyond the truncation order.
Series padded_derivative(const Series& a) {
  return Series::from_polynomial(a.var(), a.order(), derivative(a).coefficients());
}

}  // namespace

Series revert(const Series& a) {
  const int n = a.order();
  if (a[0] != 0) throw Error(ErrorCode::non_invertible, "reversion needs a(0) = 0");
  if (n < 1 || a[1] == 0) throw Error(ErrorCode::non_invertible, "reversion needs a'(0) != 0");
  const Series x = Series::variable(a.var(), n);
  const Series da = padded_derivative(a);
  Series b = x * (1 / a[1]);
  for (int iter = 0; iter < 64; ++iter) {
    const Series residual = compose(a, b) - x;
    if (residual.is_zero()) return b;
    b -= divide(residual, compose(da, b));
  }
  throw Error(ErrorCode::internal, "reversion did not converge");
}

Series evaluate_relation(const BiSeries& relation, const Series& y) {
  const int n = y.order();
  Series out = Series::from_polynomial(y.var(), n, relation.row(relation.degree1()).coefficients());
  for (int i = relation.degree1() - 1; i >= 0; --i) {
    out = mul(out, y);
    out += Series::from_polynomial(y.var(), n, relation.row(i).coefficients());
  }
  return out;
}

Series solve_algebraic(const BiSeries& relation, int order, Var var) {
  if (order < 0) throw Error(ErrorCode::invalid_argument, "negative truncation order");
  if (relation.coeff(0, 0) != 0) throw Error(ErrorCode::branch, "P(0,0) != 0: y(0)=0 is not on the curve");
  if (relation.degree1() < 1 || relation.coeff(1, 0) == 0) {
    throw Error(ErrorCode::branch, "dP/dy(0,0) = 0: degenerate branch at the origin");
  }
  const BiSeries dp = relation.derivative1();
  Series y = Series::zero(var, order);
  for (int iter = 0; iter < 64; ++iter) {
    const Series residual = evaluate_relation(relation, y);
    if (residual.is_zero()) return y;
    y -= divide(residual, evaluate_relation(dp, y));
  }
  throw Error(ErrorCode::internal, "algebraic solve did not converge");
}

}  // namespace hilbtaut
