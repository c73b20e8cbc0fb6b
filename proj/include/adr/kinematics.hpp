#pragma once

#include <utility>

#include "adr/types.hpp"

namespace adr {

// Two uniformly accelerated atoms in the same Rindler wedge. Inverse proper
// accelerations alpha1, alpha2 and a constant orthogonal separation dx_perp,
// all in units of the transition wavelength.
struct DetectorGeometry {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double dx_perp = 0.0;

  DetectorGeometry() = default;
  DetectorGeometry(double a1, double a2, double dx);

  bool coincident_world_lines() const { return alpha1 == alpha2 && dx_perp == 0.0; }
  double time_dilation() const { return alpha2 / alpha1; }  // d tau2 / d tau1
};

struct DerivedRapidity {
  double phi = 0.0;      // cosh(phi) = 1 + ((a1-a2)^2 + dx^2)/(2 a1 a2)
  double a_minus = 0.0;  // alpha2 - alpha1
  double a_plus = 0.0;   // alpha2 + alpha1
};

DerivedRapidity rapidity_phi(const DetectorGeometry& g);

// tau2 along the same constant-eta line: tau2 = tau1 * alpha2/alpha1.
double proper_time_map(double tau1, const DetectorGeometry& g);

// Hyperbolic world line (t, z) = alpha (sinh(tau/alpha), cosh(tau/alpha)).
std::pair<double, double> worldline(double tau, double alpha);

}  // namespace adr
