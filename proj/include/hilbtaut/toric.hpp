#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hilbtaut/rational.hpp"

namespace hilbtaut {

/// Integer character a e1 + b e2 of the two-dimensional torus.
struct Character {
  long a = 0;
  long b = 0;

  friend Character operator+(Character x, Character y) { return {x.a + y.a, x.b + y.b}; }
  friend Character operator-(Character x, Character y) { return {x.a - y.a, x.b - y.b}; }
  friend Character operator-(Character x) { return {-x.a, -x.b}; }
  friend Character operator*(long k, Character x) { return {k * x.a, k * x.b}; }
  friend bool operator==(Character x, Character y) { return x.a == y.a && x.b == y.b; }
  bool is_zero() const { return a == 0 && b == 0; }
};

/// Generic evaluation point (q1, q2) for characters.
struct Specialization {
  BigRational q1;
  BigRational q2;
  BigRational operator()(Character c) const { return c.a * q1 + c.b * q2; }
};

/// Affine chart around a torus-fixed point, spanned by two adjacent rays.
struct Chart {
  int ray1 = 0;
  int ray2 = 0;
  Character m1;  // dual basis: <m1, u1> = 1, <m1, u2> = 0
  Character m2;
  Character w1;  // tangent weights at the fixed point, -m1 and -m2
  Character w2;
};

struct ToricSurface {
  std::string name;
  std::vector<std::array<long, 2>> rays;
  std::vector<Chart> charts;
  /// Line-bundle generators, each written as a torus-invariant divisor sum d_rho D_rho.
  std::vector<std::string> generator_names;
  std::vector<std::vector<long>> generator_divisors;
  /// Intersection pairing on the generators.
  std::vector<std::vector<long>> pairing;
  /// Canonical class in generator coordinates.
  std::vector<long> canonical;
  long chiO = 1;
  long Ksq = 0;

  std::size_t rank() const { return generator_names.size(); }
  long intersect(const std::vector<long>& x, const std::vector<long>& y) const;
};

/// Builds "p2", "p1xp1" or "f1". Construction validates the chart data by
/// comparing localized intersection numbers with the stored pairing.
ToricSurface make_surface(std::string_view name);
const std::vector<std::string>& surface_names();

/// Line bundle in generator coordinates with a chosen equivariant lift. The
/// canonical lift has weight -d_{rho1} m1 - d_{rho2} m2 at each chart; `shift`
/// tensors it with a global character.
struct LineBundle {
  std::vector<long> coords;
  Character shift;
};

Character lift_at(const ToricSurface& s, const LineBundle& l, std::size_t chart);
/// Lift of K_S: weight -(w1 + w2) at each chart.
Character canonical_lift_at(const ToricSurface& s, std::size_t chart);

struct ClassTerm {
  int sign = 1;  // +1 or -1
  LineBundle bundle;
};

/// Formal signed sum of lifted line bundles.
struct EqKClass {
  std::vector<ClassTerm> terms;

  int rank() const;
  std::vector<long> c1() const;
};

struct ClassNumerics {
  int s = 0;
  long c1sq = 0;
  long c2 = 0;
  long c1K = 0;
  long chiO = 0;
  long Ksq = 0;
  long chiL = 0;  // chi(S, det alpha)
};

/// Whitney-formula numerics; cross-checked against localization on the surface.
ClassNumerics class_numerics(const ToricSurface& s, const EqKClass& alpha);

/// Parses "O(2)+O(1)" (P2) or "O(2,1)+O(0,1)-O(1,0)" (two generators).
EqKClass parse_class(const ToricSurface& s, std::string_view spec);
std::string format_class(const EqKClass& alpha);

/// Localized integrals over S of degree-two expressions, used for validation.
BigRational localize_on_surface(const ToricSurface& s, const std::vector<Character>& numerator_weights_a,
                                const std::vector<Character>& numerator_weights_b, const Specialization& q);

}  // namespace hilbtaut
