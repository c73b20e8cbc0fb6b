#pragma once

#include "adr/kinematics.hpp"
#include "adr/quadrature.hpp"
#include "adr/switching.hpp"
#include "adr/types.hpp"

namespace adr {

// Thermal theta-terms of the single-atom response:
//   e^{-2 eps|dw|} pi |dw| Theta(-dw) [1 + n(a1|dw|)] + e^{2 eps dw} pi dw Theta(dw) n(a1 dw),
// with n the Planck factor at temperature 1/(2 pi a1) and Theta(0) = 1/2.
double thermal_theta_terms(double dw, double eps, double alpha1);

// Tail of the flat kernel: P1 = Re int_dt^inf e^{-i dw psi} (psi - 2 i eps)^{-2} dpsi
//   = Re[ e^{-i dw dt}/(dt - 2 i eps) - i dw e^{2 eps dw} E1(i dw (dt - 2 i eps)) ].
double p1_term(double dw, double dt, double eps);

// Wedge of the flat kernel: P2 = Re int_0^dt psi e^{-i dw psi} (psi - 2 i eps)^{-2} dpsi,
// assembled from the Ei combination; real.
double p2_term(double dw, double dt, double eps);

enum class JKind { J1, J2 };

// Subtracted thermal-image integrals
//   J1 = int_dt^inf  e^{-i dw psi} B(psi) dpsi,
//   J2 = int_0^dt psi e^{-i dw psi} B(psi) dpsi,
// B(psi) = (2 a1)^{-2} sinh^{-2}((psi - 2 i eps)/(2 a1)) - (psi - 2 i eps)^{-2}.
// The flat part of J1 decays only algebraically; it is carried in closed form
// so the quadrature handles just the exponentially decaying sinh part.
Complex j_tail(JKind kind, double dw, double dt, double eps, double alpha1,
               double* err_estimate = nullptr);

// Flat-kernel tail as a complex value (the closed-form piece behind p1_term and J1).
Complex flat_tail_integral(double dw, double dt, double eps);

// Individual response, sharp switching:
//   F11 = (dt/2pi^2)[theta-terms + P1 + Re J1] + (1/2pi^2)[P2 + Re J2].
// Advisory (not error) when dt < 10 eps.
ResponseResult f11_sharp(double dw, const SharpWindow& sw, double eps, double alpha1);

// Atom-2 response via the redshift substitution dw -> (a2/a1) dw.
ResponseResult f22_sharp(double dw, const SharpWindow& sw, double eps, const DetectorGeometry& g);

// Gaussian switching by direct quadrature of
//   -(sqrt(2 pi) zeta / 32 pi^2 a1^2) int e^{-i dw psi} e^{-psi^2/2 zeta^2}
//      sinh^{-2}((psi - 2 i eps)/(2 a1)) dpsi,  |psi| <= 8 zeta.
ResponseResult f11_gaussian_quad(double dw, const GaussianWindow& sw, double eps, double alpha1);
ResponseResult f22_gaussian_quad(double dw, const GaussianWindow& sw, double eps,
                                 const DetectorGeometry& g);

// Large-zeta closed form with the second-derivative corrections
// exp(D/2 zeta^2) truncated after `order` applications of D = d^2/d(dw)^2.
// Requires zeta >= 10 eps.
ResponseResult f11_gaussian_asymptotic(double dw, const GaussianWindow& sw, double eps,
                                       double alpha1, int order = 0);

// Analytic dt-derivative of f11_sharp, assembled term by term:
// (1/2pi^2){theta + P1 + dt dP1 + Re J1 + dt Re dJ1 + dP2 + Re dJ2}.
double r11_sharp_rate(double dw, const SharpWindow& sw, double eps, double alpha1,
                      double* err_estimate = nullptr);

}  // namespace adr
