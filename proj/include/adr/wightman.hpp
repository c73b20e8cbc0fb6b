#pragma once

#include "adr/kinematics.hpp"
#include "adr/types.hpp"

namespace adr {

// Strictly positive cutoff. Physical flavor: detector time resolution, kept
// finite; Mathematical flavor: the eps' device that may be sent to zero at the
// end of a computation (and then breaks stationarity, see g11_plus_mathematical).
struct Regulator {
  enum class Flavor { Physical, Mathematical };
  double epsilon = 1e-2;
  Flavor flavor = Flavor::Physical;

  Regulator() = default;
  Regulator(double eps, Flavor f) : epsilon(eps), flavor(f) {
    if (!(epsilon > 0.0)) throw DomainError("regulator: epsilon must be > 0");
  }
  static Regulator physical(double eps) { return {eps, Flavor::Physical}; }
  static Regulator mathematical(double eps) { return {eps, Flavor::Mathematical}; }
};

// 1/sinh(z)^2, safe against overflow for large |Re z|.
Complex inv_sinh_sq(Complex z);

// Positive-frequency kernel on one hyperbola:
//   G11(psi) = -1 / (16 pi^2 a1^2 sinh^2(psi/(2 a1) - i eps/a1)).
Complex g11_plus(double psi, double alpha1, const Regulator& reg);

// Partial image sum -(1/4pi^2) sum_{|n|<=n_max} (psi - 2i eps + 2 pi i a1 n)^{-2}.
Complex g11_plus_series(double psi, double alpha1, const Regulator& reg, int n_max);
Complex g11_plus_series(Complex psi, double alpha1, const Regulator& reg, int n_max);

// Two-argument kernel with the mathematical cutoff eps'. Not a function of
// tau1 - tau1' alone: the cosh((tau1+tau1')/2a1) term breaks stationarity.
Complex g11_plus_mathematical(double tau1, double tau1p, double alpha1, const Regulator& reg);

// Crossed kernel G12 = G21:
//   -1/(16 pi^2 a1 a2) [sinh(psi/2a1 - 4 i eps/a+ + phi/2) sinh(... - phi/2)]^{-1}.
Complex g_cross(double psi, const DetectorGeometry& g, const Regulator& reg);

// Atom-2 kernel expressed in tau1 time: -(1/16 pi^2 a2^2) sinh^{-2}(psi/2a1 - i eps/a1).
Complex g22_plus(double psi, const DetectorGeometry& g, const Regulator& reg);

// Bare crossed kernel [sinh(A + phi/2) sinh(A - phi/2)]^{-1} with
// A = psi/(2 a1) - 4 i eps_signed/a+. eps_signed may be negative.
Complex cross_kernel_c0(double psi, const DetectorGeometry& g, double eps_signed);

}  // namespace adr
