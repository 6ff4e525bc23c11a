#pragma once

#include <vector>

#include "hilbtaut/series.hpp"
#include "oracles.hpp"

inline oracle::Poly to_poly(const hilbtaut::Series& s) { return s.coefficients(); }

inline hilbtaut::Series from_poly(hilbtaut::Var v, const oracle::Poly& p) { return hilbtaut::Series(v, p); }

inline std::vector<hilbtaut::BigRational> ints(std::initializer_list<long> xs) {
  std::vector<hilbtaut::BigRational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
