#pragma once

#include <vector>

#include "hilbtaut/rational.hpp"

namespace hilbtaut {

using Matrix = std::vector<std::vector<BigRational>>;

/// Rank over Q, by fraction-free elimination.
long matrix_rank(const Matrix& a);

/// Exact solution of the (possibly overdetermined) system a x = b. Rows are
/// scaled to integers and eliminated fraction-free (Bareiss) with full
/// pivoting. Throws Error(non_invertible) when a has rank below its column
/// count and Error(universality_violation) when a redundant row is inconsistent.
std::vector<BigRational> solve_exact(const Matrix& a, const std::vector<BigRational>& b);

}  // namespace hilbtaut
