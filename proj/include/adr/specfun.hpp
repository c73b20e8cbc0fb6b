#pragma once

#include "adr/types.hpp"

namespace adr {

// Complex sine integral Si(z) = int_0^z sin(t)/t dt. Entire.
// Requires |z| < 700 (exponential growth off the real axis would overflow).
Complex sine_integral(Complex z);

// Complex cosine integral, principal branch,
// Ci(z) = gamma + log z + int_0^z (cos t - 1)/t dt.
// z must not lie on the branch cut (-inf, 0].
Complex cosine_integral(Complex z);

// Principal-branch E1(z) = int_z^inf e^-t/t dt, z not on (-inf, 0].
Complex exp_integral_e1(Complex z);

// Exponential integral Ei. For real x < 0 returns the real principal value;
// for complex z: Ei(z) = -E1(-z) + i pi sgn(Im z). z = 0 is a domain error.
Complex exp_integral_ei(Complex z);
double exp_integral_ei(double x);

// d/ds Phi(z, s, a) at s = 0: Phi^{(0,1,0)}(z, 0, a) = -sum_{n>=0} z^n Log(n+a).
// Requires 0 <= z < 1 and every n+a off the non-positive real axis.
// If the term cap is hit, *slow_convergence is set and the partial sum returned.
Complex lerch_phi_sderiv(double z, Complex a, bool* slow_convergence = nullptr);

namespace detail {
// Hyperbolic pair used near the imaginary axis: Shi/Chi by cancellation-free series.
Complex shi_series(Complex w);
Complex chin_series(Complex w);  // Chi(w) - gamma - Log(w), entire part
}  // namespace detail

}  // namespace adr
