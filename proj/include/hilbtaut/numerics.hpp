#pragma once

namespace hilbtaut {

/// Numerical data of a sheaf V of rank s on a surface, together with the
/// surface invariants entering the universal factorization.
struct ModuliNumerics {
  int s = 0;
  int r = 1;  // s + 1; enriques() stores the twist r = s - 1 instead
  long chi = 0;
  long c1sq = 0;
  long c2 = 0;
  long d = 0;  // half the moduli dimension on a K3
  long chiO = 0;
  long c1K = 0;
  long Ksq = 0;

  /// K3 sheaf with <v,v> = 2d - 2: c1^2 = 2d - 2 + 2s(chi - s), c2 = c1^2/2 + 2s - chi.
  static ModuliNumerics k3(int s, long chi, long d);
  /// K3 sheaf from Chern data; chi follows from Riemann-Roch. c1^2 must be even.
  static ModuliNumerics k3_from_classes(int s, long c1sq, long c2);
  /// Isotropic sheaf on an abelian surface: c1^2 = 2 s chi, c2 = (s - 1) chi.
  static ModuliNumerics abelian(int s, long chi);
  /// Enriques data of the strange-duality matching: rank r+1, chi(L) = chi,
  /// chi(V) = (r-1)n + 1, so c1^2 = 2chi - 2 and c2 = chi - (r-1)(n-1).
  static ModuliNumerics enriques(int r, long chi, int n);

  /// (r-1)c2 + (1 - r/2)c1^2 - r^2 + 2r; throws Error(domain) when not integral.
  static long d_from_classes(int r, long c1sq, long c2);
};

}  // namespace hilbtaut
