#include "hilbtaut/oracle.hpp"

#include <functional>
#include <numeric>
#include <string>

#include "hilbtaut/error.hpp"
#include "hilbtaut/series.hpp"

namespace hilbtaut {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(parts.front()), 0);
  for (int row : parts) {
    for (int i = 0; i < row; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back({prefix});
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

int HilbFixedPoint::size() const {
  int n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  std::vector<std::vector<Partition>> by_size;
  for (int m = 0; m <= n; ++m) by_size.push_back(partitions(m));
  std::vector<HilbFixedPoint> out;
  HilbFixedPoint current;
  const std::size_t charts = s.charts.size();
  std::function<void(std::size_t, int)> rec = [&](std::size_t chart, int left) {
    if (chart + 1 == charts) {
      for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
        current.parts.push_back(p);
        out.push_back(current);
        current.parts.pop_back();
      }
      return;
    }
    for (int m = 0; m <= left; ++m) {
      for (const auto& p : by_size[static_cast<std::size_t>(m)]) {
        current.parts.push_back(p);
        rec(chart + 1, left - m);
        current.parts.pop_back();
      }
    }
  };
  rec(0, n);
  return out;
}

std::vector<Character> tangent_weights(const ToricSurface& s, const HilbFixedPoint& fp) {
  std::vector<Character> out;
  for (std::size_t c = 0; c < fp.parts.size(); ++c) {
    const Character w1 = s.charts[c].w1;
    const Character w2 = s.charts[c].w2;
    const auto& rows = fp.parts[c].parts;
    const std::vector<int> cols = fp.parts[c].conjugate();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      for (int i = 0; i < rows[j]; ++i) {
        const long leg = rows[j] - i - 1;
        const long arm = cols[static_cast<std::size_t>(i)] - static_cast<long>(j) - 1;
        out.push_back((leg + 1) * w1 - arm * w2);
        out.push_back((-leg) * w1 + (arm + 1) * w2);
      }
    }
  }
  for (const auto& w : out) {
    if (w.is_zero()) throw Error(ErrorCode::internal, "zero tangent weight at a fixed point of " + s.name);
  }
  return out;
}

std::vector<SignedCharacter> taut_weights(const ToricSurface& s, const EqKClass& alpha, const HilbFixedPoint& fp) {
  std::vector<SignedCharacter> out;
  for (std::size_t c = 0; c < fp.parts.size(); ++c) {
    const Chart& ch = s.charts[c];
    const auto& rows = fp.parts[c].parts;
    for (const auto& term : alpha.terms) {
      const Character m = lift_at(s, term.bundle, c);
      for (std::size_t j = 0; j < rows.size(); ++j) {
        for (int i = 0; i < rows[j]; ++i) {
          out.push_back({term.sign, m + static_cast<long>(i) * ch.m1 + static_cast<long>(j) * ch.m2});
        }
      }
    }
  }
  return out;
}

SpecializationStream::SpecializationStream(std::uint64_t seed) : rng_(seed) {}

Specialization SpecializationStream::next() {
  std::uniform_int_distribution<long> num(-997, 997);
  std::uniform_int_distribution<long> den(1, 211);
  Specialization q;
  do {
    q.q1 = rational(num(rng_), den(rng_));
    q.q2 = rational(num(rng_), den(rng_));
  } while (q.q1 == 0 || q.q2 == 0);
  return q;
}

std::vector<BigRational> todd_log_coefficients(int order) {
  // (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
  std::vector<BigRational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = BigRational((k % 2 == 0) ? 1 : -1) / BigRational(factorial(k + 1));
  }
  return (-log(Series(Var::x, c))).coefficients();
}

namespace {

struct PointData {
  std::vector<Character> tangent;
  std::vector<SignedCharacter> taut;
};

bool tangent_values_nonzero(const std::vector<PointData>& points, const Specialization& q) {
  for (const auto& p : points) {
    for (const auto& w : p.tangent) {
      if (q(w) == 0) return false;
    }
  }
  return true;
}

bool independent(const Specialization& a, const Specialization& b) { return a.q1 * b.q2 != a.q2 * b.q1; }

/// Draws two independent pole-free specializations, evaluates `sum_at` at both and requires agreement.
BigRational double_specialized(const std::vector<PointData>& points, const OracleOptions& options,
                               const std::function<BigRational(const Specialization&)>& sum_at, OracleTrace* trace,
                               const std::string& what) {
  SpecializationStream stream(options.seed);
  auto draw = [&](const Specialization* other) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Specialization q = stream.next();
      if (other && !independent(q, *other)) continue;
      if (tangent_values_nonzero(points, q)) return q;
    }
    throw Error(ErrorCode::internal, "could not draw a pole-free specialization");
  };
  const Specialization first = draw(nullptr);
  const Specialization second = draw(&first);
  const BigRational a = sum_at(first);
  const BigRational b = sum_at(second);
  if (trace) {
    trace->first = first;
    trace->second = second;
    trace->fixed_points = static_cast<long>(points.size());
  }
  if (a != b) {
    throw Error(ErrorCode::inconsistent_specialization, what + ": specializations disagree (" + to_string(a) +
                                                            " vs " + to_string(b) + ")");
  }
  return a;
}

BigRational product(const std::vector<Character>& ws, const Specialization& q) {
  BigRational out = 1;
  for (const auto& w : ws) out *= q(w);
  return out;
}

BigRational tautological_integral(const ToricSurface& s, const EqKClass& alpha, int n, bool chern,
                                  const OracleOptions& options, OracleTrace* trace) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  if (n == 0) return 1;
  std::vector<PointData> points;
  for (const auto& fp : enumerate_fixed_points(s, n)) {
    points.push_back({tangent_weights(s, fp), taut_weights(s, alpha, fp)});
  }
  const int top = 2 * n;
  auto sum_at = [&](const Specialization& q) {
    BigRational total = 0;
    for (const auto& p : points) {
      std::vector<BigRational> values;
      std::vector<int> signs;
      for (const auto& t : p.taut) {
        values.push_back(q(t.c));
        signs.push_back(t.sign);
      }
      // log c(u) = sum_k (-1)^{k+1} p_k u^k / k; the Segre class negates it.
      std::vector<BigRational> lg(static_cast<std::size_t>(top) + 1);
      std::vector<BigRational> powers(values.size(), BigRational(1));
      for (int k = 1; k <= top; ++k) {
        BigRational pk = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
          powers[i] *= values[i];
          pk += signs[i] * powers[i];
        }
        BigRational coeff = pk / k;
        if (k % 2 == 0) coeff = -coeff;
        if (!chern) coeff = -coeff;
        lg[static_cast<std::size_t>(k)] = coeff;
      }
      total += exp(Series(Var::u, lg))[top] / product(p.tangent, q);
    }
    return total;
  };
  return double_specialized(points, options, sum_at, trace, chern ? "chern_integral" : "segre_integral");
}

}  // namespace

BigRational segre_integral(const ToricSurface& s, const EqKClass& alpha, int n, const OracleOptions& options,
                           OracleTrace* trace) {
  return tautological_integral(s, alpha, n, false, options, trace);
}

BigRational chern_integral(const ToricSurface& s, const EqKClass& alpha, int n, const OracleOptions& options,
                           OracleTrace* trace) {
  return tautological_integral(s, alpha, n, true, options, trace);
}

BigInteger verlinde_chi(const ToricSurface& s, const LineBundle& l, int r, int n, const OracleOptions& options,
                        OracleTrace* trace) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be non-negative");
  if (n == 0) return 1;
  // det(L^[n]) (x) det(O^[n])^{r-1} has weight sum over boxes of (lift of L + r * box character).
  const EqKClass line{{{1, l}}};
  std::vector<PointData> points;
  std::vector<Character> weight;
  for (const auto& fp : enumerate_fixed_points(s, n)) {
    PointData p{tangent_weights(s, fp), taut_weights(s, line, fp)};
    Character v;
    std::size_t k = 0;
    for (std::size_t c = 0; c < fp.parts.size(); ++c) {
      const Character m = lift_at(s, l, c);
      for (int i = 0; i < fp.parts[c].size(); ++i, ++k) v = v + m + static_cast<long>(r) * (p.taut[k].c - m);
    }
    weight.push_back(v);
    points.push_back(std::move(p));
  }
  const int top = 2 * n;
  const std::vector<BigRational> todd = todd_log_coefficients(top);
  // Holomorphic Lefschetz along the direction q with grading h: each point contributes
  // [h^{2n}] exp(v h + sum_k todd_k p_k(tangent) h^k) / prod(tangent).
  auto sum_at = [&](const Specialization& q) {
    BigRational total = 0;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      const auto& p = points[idx];
      std::vector<BigRational> lg(static_cast<std::size_t>(top) + 1);
      lg[1] = q(weight[idx]);
      std::vector<BigRational> values;
      for (const auto& w : p.tangent) values.push_back(q(w));
      std::vector<BigRational> powers(values.size(), BigRational(1));
      for (int k = 1; k <= top; ++k) {
        BigRational pk = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
          powers[i] *= values[i];
          pk += powers[i];
        }
        lg[static_cast<std::size_t>(k)] += todd[static_cast<std::size_t>(k)] * pk;
      }
      total += exp(Series(Var::h, lg))[top] / product(p.tangent, q);
    }
    return total;
  };
  const BigRational chi = double_specialized(points, options, sum_at, trace, "verlinde_chi");
  if (chi.get_den() != 1) throw Error(ErrorCode::internal, "verlinde_chi: non-integral result " + to_string(chi));
  return chi.get_num();
}

}  // namespace hilbtaut
