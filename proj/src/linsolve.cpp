#include "hilbtaut/linsolve.hpp"

#include <string>
#include <utility>

#include "hilbtaut/error.hpp"

namespace hilbtaut {

namespace {

using IntMatrix = std::vector<std::vector<BigInteger>>;

IntMatrix integer_rows(const Matrix& a) {
  IntMatrix out;
  for (const auto& row : a) {
    BigInteger scale = 1;
    for (const auto& x : row) scale = lcm(scale, BigInteger(x.get_den()));
    std::vector<BigInteger> r;
    for (const auto& x : row) r.push_back(BigInteger(x.get_num()) * (scale / x.get_den()));
    out.push_back(std::move(r));
  }
  return out;
}

struct Elimination {
  IntMatrix m;
  std::vector<std::size_t> column_order;  // column_order[k] = original column of pivot k
  std::size_t rank = 0;
};

/// Bareiss elimination pivoting over the first `pivot_columns` columns only.
Elimination bareiss(IntMatrix m, std::size_t pivot_columns) {
  Elimination e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t j = 0; j < pivot_columns; ++j) e.column_order.push_back(j);
  BigInteger prev = 1;
  std::size_t k = 0;
  for (; k < rows && k < pivot_columns; ++k) {
    std::size_t pr = rows;
    std::size_t pc = pivot_columns;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < pivot_columns; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == rows || abs(m[i][j]) < abs(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) std::swap(row[k], row[pc]);
      std::swap(e.column_order[k], e.column_order[pc]);
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  e.rank = k;
  e.m = std::move(m);
  return e;
}

}  // namespace

long matrix_rank(const Matrix& a) {
  if (a.empty()) return 0;
  return static_cast<long>(bareiss(integer_rows(a), a.front().size()).rank);
}

std::vector<BigRational> solve_exact(const Matrix& a, const std::vector<BigRational>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "solve_exact: row count mismatch");
  if (a.empty()) throw Error(ErrorCode::invalid_argument, "solve_exact: empty system");
  const std::size_t n = a.front().size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != n) throw Error(ErrorCode::invalid_argument, "solve_exact: ragged matrix");
    aug[i].push_back(b[i]);
  }
  const Elimination e = bareiss(integer_rows(aug), n);
  if (e.rank < n) {
    throw Error(ErrorCode::non_invertible, "solve_exact: matrix has rank " + std::to_string(e.rank) + " < " +
                                               std::to_string(n) + " unknowns");
  }
  for (std::size_t i = n; i < e.m.size(); ++i) {
    if (e.m[i][n] != 0) {
      throw Error(ErrorCode::universality_violation,
                  "solve_exact: redundant row " + std::to_string(i) + " is inconsistent with the solution");
    }
  }
  std::vector<BigRational> y(n);
  for (std::size_t k = n; k-- > 0;) {
    BigRational acc(e.m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= BigRational(e.m[k][j]) * y[j];
    y[k] = acc / BigRational(e.m[k][k]);
  }
  std::vector<BigRational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[e.column_order[k]] = y[k];
  return x;
}

}  // namespace hilbtaut
