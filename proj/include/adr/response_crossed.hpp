#pragma once

#include "adr/kinematics.hpp"
#include "adr/switching.hpp"
#include "adr/types.hpp"

namespace adr {

enum class EpsSign { Plus, Minus };

// Ingredients of the crossed closed form at one (dw, geometry, eps) point.
// kappa1/kappa2/lambda_delta are the intermediate quantities of the pole-only
// assembly (used by the diagnostic path and its tests); script_a and script_i
// are the complete quantities entering the production assembly.
struct CrossClosedFormParts {
  Complex kappa1{};
  Complex kappa2{};
  Complex lambda_delta{};
  Complex script_a{};
  Complex script_i{};
  Complex lerch_arg{};  // i phi/(2 pi) + 4 eps/(pi a+)
};

// Half-line transform of the bare crossed kernel:
//   int_0^inf e^{-i sigma dw psi} G_c0(psi, +-eps) dpsi.
// Closed form: pole tower (Planck-dressed phase factor) plus the real
// non-pole series M(w, c). Requires sigma dw != 0 and phi > 0.
Complex half_line_integral(double dw, double sigma, const DetectorGeometry& g, double eps,
                           EpsSign es, bool* slow_convergence = nullptr);

// Pole-tower-only variant of the closed form (kappa factors and
// Lerch-derivative towers, no non-pole series). Kept for comparison tests:
// away from alpha1 = alpha2 it misses the non-pole part of the integral.
Complex half_line_integral_pole_only(double dw, double sigma, const DetectorGeometry& g,
                                     double eps, EpsSign es);

// The non-pole series M(w, c) (real), and the kernel-scale pole term, exposed
// for tests. c = 8 eps / a+.
double halfline_nonpole_m(double w, double c, double phi, bool* slow_convergence = nullptr);

// Script-A combination of two half-line integrals:
//   A(dw, a1, a2) = -i sinh(phi)/2 [A_eps(dw a1) + A_{-eps}(-dw a2)],
// swap=true exchanges the roles of alpha1 and alpha2.
Complex script_a(double dw, const DetectorGeometry& g, double eps, bool swap);

// Tail combination
//   I = +i sinh(phi)/(4 a1) [ int_dt^inf e^{-i dw psi} G_c0(psi, +eps)
//                           + int_dt^inf e^{+i (a2/a1) dw psi} G_c0(psi, -eps) ].
Complex script_i_tail(double dw, double dt, const DetectorGeometry& g, double eps,
                      double* err_estimate = nullptr);

// Crossed response, sharp switching. Assembles
//   F21 = [4 pi^2 sinh(phi) dw a-]^{-1} { e^{-i th+}[A12 + I] + e^{+i th-}[-A21 + I*] },
// th± = dw (a-/2a1)(dt ± 2T). |a-| < 1e-6 a+ routes to the equal-acceleration
// limit path; dw = 0 and phi = 0 are rejected.
ResponseResult f21_sharp(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps);
ResponseResult f12_sharp(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps);

// a- -> 0 limit at fixed (alpha, phi): the bracket vanishes linearly in a-,
// so F21 = pref * dB/da-(0), evaluated by fourth-order central differences.
ResponseResult f21_sharp_equal_acc(double dw, const SharpWindow& sw, double alpha, double phi,
                                   double eps);

// Crossed response, Gaussian switching, by direct quadrature of the reduced
// single integral; truncation |psi| <= 8 zeta + 5 alpha1.
ResponseResult f21_gaussian_quad(double dw, const GaussianWindow& sw, const DetectorGeometry& g,
                                 double eps);

// Large-zeta closed form (full-line pole sum) with exp(2 a1^2 D / (a+^2 zeta^2))
// corrections truncated at `order`. Requires zeta >= 10 eps.
ResponseResult f21_gaussian_asymptotic(double dw, const GaussianWindow& sw,
                                       const DetectorGeometry& g, double eps, int order = 0);

// Analytic dt-derivative of the sharp crossed response (complex; the figure
// quantity is 2 Re of it). Routes to the limit path like f21_sharp.
Complex r21_sharp_rate(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps);

// Real-arithmetic re-assembly of Re F21 from cos/sin phase factors and the
// Re/Im parts of script-A and script-I; an independent code path against the
// complex assembly.
double re_f21_sharp_cos_sin(double dw, const SharpWindow& sw, const DetectorGeometry& g,
                            double eps);

CrossClosedFormParts cross_closed_form_parts(double dw, const SharpWindow& sw,
                                             const DetectorGeometry& g, double eps);

}  // namespace adr
