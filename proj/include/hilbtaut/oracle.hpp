#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hilbtaut/rational.hpp"
#include "hilbtaut/toric.hpp"

namespace hilbtaut {

/// Weakly decreasing positive parts; parts[j] is the length of row j.
struct Partition {
  std::vector<int> parts;

  int size() const;
  std::vector<int> conjugate() const;
};

/// All partitions of n, largest first part first.
std::vector<Partition> partitions(int n);

/// One partition per chart of the surface.
struct HilbFixedPoint {
  std::vector<Partition> parts;

  int size() const;
};

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurface& s, int n);

/// 2n tangent characters at the fixed point (arm/leg formula per chart).
/// Throws Error(internal) on a zero character.
std::vector<Character> tangent_weights(const ToricSurface& s, const HilbFixedPoint& fp);

struct SignedCharacter {
  int sign = 1;
  Character c;
};

/// Fiber of alpha^[n]: for each term and each box (i, j) at chart c, the lift
/// at c plus i m1 + j m2.
std::vector<SignedCharacter> taut_weights(const ToricSurface& s, const EqKClass& alpha, const HilbFixedPoint& fp);

/// Draws generic evaluation points from a seeded stream.
class SpecializationStream {
 public:
  explicit SpecializationStream(std::uint64_t seed);
  Specialization next();

 private:
  std::mt19937_64 rng_;
};

struct OracleOptions {
  std::uint64_t seed = 20240601;
};

/// Both specializations actually used, for reporting.
struct OracleTrace {
  Specialization first;
  Specialization second;
  long fixed_points = 0;
};

/// int over S^[n] of s_{2n}(alpha^[n]), evaluated at two specializations that must agree.
BigRational segre_integral(const ToricSurface& s, const EqKClass& alpha, int n, const OracleOptions& options = {},
                           OracleTrace* trace = nullptr);
/// int over S^[n] of c_{2n}(alpha^[n]).
BigRational chern_integral(const ToricSurface& s, const EqKClass& alpha, int n, const OracleOptions& options = {},
                           OracleTrace* trace = nullptr);
/// chi(S^[n], det(L^[n]) (x) det(O^[n])^{r-1}); Error(internal) if the sum is not an integer.
BigInteger verlinde_chi(const ToricSurface& s, const LineBundle& l, int r, int n, const OracleOptions& options = {},
                        OracleTrace* trace = nullptr);

/// Coefficients of log(x / (1 - e^{-x})) through x^order.
std::vector<BigRational> todd_log_coefficients(int order);

}  // namespace hilbtaut
