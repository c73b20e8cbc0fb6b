#include "adr/wightman.hpp"

#include <cmath>

namespace adr {

namespace {
void require_physical(const Regulator& reg, const char* who) {
  if (reg.flavor != Regulator::Flavor::Physical) {
    throw DomainError(std::string(who) + ": requires the physical-cutoff regulator");
  }
}
void require_mathematical(const Regulator& reg, const char* who) {
  if (reg.flavor != Regulator::Flavor::Mathematical) {
    throw DomainError(std::string(who) + ": requires the mathematical-cutoff regulator");
  }
}
constexpr double k16Pi2 = 16.0 * kPi * kPi;
}  // namespace

Complex inv_sinh_sq(Complex z) {
  double x = z.real();
  if (std::abs(x) > 330.0) {
    // sinh(z) ~ sgn(x) e^{|x|} e^{i sgn(x) Im z}/2; the square underflows to 0 safely.
    Complex zs = (x > 0) ? z : -z;
    return 4.0 * std::exp(-2.0 * zs);
  }
  Complex s = std::sinh(z);
  return 1.0 / (s * s);
}

Complex g11_plus(double psi, double alpha1, const Regulator& reg) {
  require_physical(reg, "g11_plus");
  if (!(alpha1 > 0.0)) throw DomainError("g11_plus: alpha1 must be > 0");
  Complex arg(psi / (2.0 * alpha1), -reg.epsilon / alpha1);
  return -inv_sinh_sq(arg) / (k16Pi2 * alpha1 * alpha1);
}

Complex g11_plus_series(Complex psi, double alpha1, const Regulator& reg, int n_max) {
  require_physical(reg, "g11_plus_series");
  if (n_max < 1) throw DomainError("g11_plus_series: n_max >= 1");
  Complex sum(0.0, 0.0);
  for (int n = -n_max; n <= n_max; ++n) {
    Complex d = psi + Complex(0.0, -2.0 * reg.epsilon + 2.0 * kPi * alpha1 * n);
    sum += 1.0 / (d * d);
  }
  return -sum / (4.0 * kPi * kPi);
}

Complex g11_plus_series(double psi, double alpha1, const Regulator& reg, int n_max) {
  return g11_plus_series(Complex(psi, 0.0), alpha1, reg, n_max);
}

Complex g11_plus_mathematical(double tau1, double tau1p, double alpha1, const Regulator& reg) {
  require_mathematical(reg, "g11_plus_mathematical");
  if (!(alpha1 > 0.0)) throw DomainError("g11_plus_mathematical: alpha1 must be > 0");
  const double ep = reg.epsilon;
  const double sh = std::sinh((tau1 - tau1p) / (2.0 * alpha1));
  const double ch = std::cosh((tau1 + tau1p) / (2.0 * alpha1));
  Complex denom = -4.0 * alpha1 * alpha1 * sh * Complex(sh, -(ep / alpha1) * ch) + ep * ep;
  return (1.0 / (4.0 * kPi * kPi)) / denom;
}

Complex cross_kernel_c0(double psi, const DetectorGeometry& g, double eps_signed) {
  const DerivedRapidity rp = rapidity_phi(g);
  const double phi = rp.phi;
  Complex a(psi / (2.0 * g.alpha1), -4.0 * eps_signed / rp.a_plus);
  // [sinh(a + phi/2) sinh(a - phi/2)]^{-1} = 2 / (cosh(2a) - cosh(phi))
  double x = 2.0 * a.real();
  if (std::abs(x) > phi + 80.0) {
    Complex two_a = (x > 0) ? 2.0 * a : -2.0 * a;
    return 4.0 * std::exp(-two_a);  // cosh(2a) ~ e^{|2a|}/2 dominates cosh(phi)
  }
  return 2.0 / (std::cosh(2.0 * a) - std::cosh(phi));
}

Complex g_cross(double psi, const DetectorGeometry& g, const Regulator& reg) {
  require_physical(reg, "g_cross");
  return -cross_kernel_c0(psi, g, reg.epsilon) / (k16Pi2 * g.alpha1 * g.alpha2);
}

Complex g22_plus(double psi, const DetectorGeometry& g, const Regulator& reg) {
  require_physical(reg, "g22_plus");
  Complex arg(psi / (2.0 * g.alpha1), -reg.epsilon / g.alpha1);
  return -inv_sinh_sq(arg) / (k16Pi2 * g.alpha2 * g.alpha2);
}

}  // namespace adr
