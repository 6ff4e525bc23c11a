#pragma once

// Independent reference computations for the tests. Everything here works on
// plain coefficient vectors and avoids the library's series algorithms.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;  // truncated power series, index = exponent

inline Poly zeros(int order) { return Poly(static_cast<std::size_t>(order) + 1, Q(0)); }

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size(), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Long division 1/a, a[0] != 0.
inline Poly inverse(const Poly& a) {
  Poly out(a.size(), Q(0));
  out[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Q acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

/// Generalized binomial C(e, k) for rational e.
inline Q binom(const Q& e, int k) {
  Q out = 1;
  for (int i = 0; i < k; ++i) out = out * (e - i) / (i + 1);
  return out;
}

/// (1 + a t)^e by the binomial sum.
inline Poly binomial_power(const Q& a, const Q& e, int order) {
  Poly out = zeros(order);
  Q ak = 1;
  for (int k = 0; k <= order; ++k) {
    out[static_cast<std::size_t>(k)] = binom(e, k) * ak;
    ak *= a;
  }
  return out;
}

/// outer(inner) with inner[0] == 0, by accumulating powers of inner.
inline Poly compose(const Poly& outer, const Poly& inner) {
  Poly out(inner.size(), Q(0));
  Poly p(inner.size(), Q(0));
  p[0] = 1;
  for (std::size_t k = 0; k < outer.size() && k < inner.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += outer[k] * p[i];
    p = mul(p, inner);
  }
  return out;
}

/// Compositional inverse of f (f[0] = 0, f[1] != 0) by undetermined
/// coefficients: fixes g_n so that [x^n] f(g(x)) matches x, one n at a time.
inline Poly brute_force_revert(const Poly& f) {
  const int order = static_cast<int>(f.size()) - 1;
  Poly g = zeros(order);
  if (order >= 1) g[1] = 1 / f[1];
  for (int n = 2; n <= order; ++n) {
    const Q current = compose(f, g)[static_cast<std::size_t>(n)];
    g[static_cast<std::size_t>(n)] = -current / f[1];
  }
  return g;
}

/// Lehn's rank-one series A1..A4 in z = t(1+2t)^2 (index 1..4), and the rank-one A0 = (1+2t)^{-2}(1+3t).
inline Poly lehn_series(int index, int order) {
  const Poly r2 = binomial_power(2, Q(1, 2), order);
  const Poly r6 = binomial_power(6, Q(1, 2), order);
  Poly sum(r2.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = r2[i] + r6[i];
  Poly in_t;
  switch (index) {
    case 0: {
      Poly lin3 = zeros(order);
      lin3[0] = 1;
      if (order >= 1) lin3[1] = 3;
      in_t = mul(binomial_power(2, -2, order), lin3);
      break;
    }
    case 1: in_t = r2; break;
    case 2: in_t = mul(binomial_power(2, Q(3, 2), order), binomial_power(6, Q(-1, 2), order)); break;
    case 3:
      in_t = mul(binomial_power(2, -1, order), sum);
      for (auto& c : in_t) c /= 2;
      break;
    default:
      in_t = mul(mul(r2, r6), inverse(mul(sum, sum)));
      for (auto& c : in_t) c *= 4;
      break;
  }
  Poly z = binomial_power(2, 2, order);  // (1+2t)^2, shifted below
  Poly z_of_t = zeros(order);
  for (int k = 1; k <= order; ++k) z_of_t[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(k - 1)];
  return compose(in_t, brute_force_revert(z_of_t));
}

/// [h^{2n} zeta^n] (1-zeta)^{3n+2} / (1-h-zeta)^2 via the double sum
/// 1/(1-h-zeta)^2 = sum_{a,b} (a+b+1) C(a+b, a) h^a zeta^b.
inline Q blowup_double_sum(int n) {
  Q total = 0;
  const int a = 2 * n;
  for (int b = 0; b <= n; ++b) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a + b), static_cast<unsigned long>(a));
    mpz_class d;
    mpz_bin_uiui(d.get_mpz_t(), static_cast<unsigned long>(3 * n + 2), static_cast<unsigned long>(n - b));
    const Q sign = ((n - b) % 2 == 0) ? 1 : -1;
    total += Q(a + b + 1) * Q(c) * sign * Q(d);
  }
  return total;
}

/// Plain Gauss-Jordan over Q for square non-singular systems.
inline std::vector<Q> gauss_jordan(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a[p][k] == 0) ++p;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Q f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) b[k] /= a[k][k];
  return b;
}

/// Binomial C(m, k) for integer m (possibly negative), as a rational.
inline Q int_binom(long m, int k) { return binom(Q(m), k); }

}  // namespace oracle
