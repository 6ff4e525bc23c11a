#include "hilbtaut/numerics.hpp"

#include <string>

#include "hilbtaut/error.hpp"

namespace hilbtaut {

long ModuliNumerics::d_from_classes(int r, long c1sq, long c2) {
  // (1 - r/2) c1^2 = ((2 - r) c1^2) / 2
  const long half_term = (2L - r) * c1sq;
  if (half_term % 2 != 0) {
    throw Error(ErrorCode::domain, "d is not integral for r=" + std::to_string(r) + ", c1^2=" + std::to_string(c1sq));
  }
  return (r - 1L) * c2 + half_term / 2 - static_cast<long>(r) * r + 2L * r;
}

ModuliNumerics ModuliNumerics::k3(int s, long chi, long d) {
  ModuliNumerics m;
  m.s = s;
  m.r = s + 1;
  m.chi = chi;
  m.d = d;
  m.c1sq = 2 * d - 2 + 2L * s * (chi - s);
  m.c2 = m.c1sq / 2 + 2L * s - chi;
  m.chiO = 2;
  if (d_from_classes(m.r, m.c1sq, m.c2) != d) {
    throw Error(ErrorCode::internal, "K3 numerics inconsistent with the dimension formula");
  }
  return m;
}

ModuliNumerics ModuliNumerics::k3_from_classes(int s, long c1sq, long c2) {
  if (c1sq % 2 != 0) throw Error(ErrorCode::domain, "c1^2 must be even on a K3 surface");
  ModuliNumerics m;
  m.s = s;
  m.r = s + 1;
  m.c1sq = c1sq;
  m.c2 = c2;
  m.chi = c1sq / 2 - c2 + 2L * s;
  m.chiO = 2;
  m.d = d_from_classes(m.r, c1sq, c2);
  if (2 * m.d - 2 != c1sq - 2L * s * (m.chi - s)) {
    throw Error(ErrorCode::internal, "K3 numerics inconsistent with the Mukai pairing");
  }
  return m;
}

ModuliNumerics ModuliNumerics::abelian(int s, long chi) {
  ModuliNumerics m;
  m.s = s;
  m.r = s + 1;
  m.chi = chi;
  m.c1sq = 2L * s * chi;
  m.c2 = (s - 1L) * chi;
  m.chiO = 0;
  return m;
}

ModuliNumerics ModuliNumerics::enriques(int r, long chi, int n) {
  ModuliNumerics m;
  m.s = r + 1;
  m.r = r;
  m.chi = chi;
  m.c1sq = 2 * chi - 2;
  m.c2 = chi - (r - 1L) * (n - 1L);
  m.chiO = 1;
  return m;
}

}  // namespace hilbtaut
