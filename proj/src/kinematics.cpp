#include "adr/kinematics.hpp"

#include <cmath>

namespace adr {

DetectorGeometry::DetectorGeometry(double a1, double a2, double dx)
    : alpha1(a1), alpha2(a2), dx_perp(dx) {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) throw DomainError("geometry: alpha must be > 0");
  if (!(dx_perp >= 0.0)) throw DomainError("geometry: dx_perp must be >= 0");
}

DerivedRapidity rapidity_phi(const DetectorGeometry& g) {
  DerivedRapidity out;
  out.a_minus = g.alpha2 - g.alpha1;
  out.a_plus = g.alpha2 + g.alpha1;
  const double d2 = out.a_minus * out.a_minus + g.dx_perp * g.dx_perp;
  const double x = d2 / (2.0 * g.alpha1 * g.alpha2);  // cosh(phi) - 1
  // acosh(1+x) via the log form, stable for small x
  out.phi = std::log1p(x + std::sqrt(x * (x + 2.0)));
  return out;
}

double proper_time_map(double tau1, const DetectorGeometry& g) {
  return tau1 * (g.alpha2 / g.alpha1);
}

std::pair<double, double> worldline(double tau, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("worldline: alpha must be > 0");
  return {alpha * std::sinh(tau / alpha), alpha * std::cosh(tau / alpha)};
}

}  // namespace adr
