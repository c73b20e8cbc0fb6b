#include "adr/rates.hpp"

#include <cmath>

#include "adr/response_crossed.hpp"
#include "adr/response_individual.hpp"

namespace adr {
namespace {

Complex eval_component(ResponseComponent c, double dw, const SwitchingProfile& sw,
                       const DetectorGeometry& g, double eps) {
  if (std::holds_alternative<SharpWindow>(sw)) {
    const auto& w = std::get<SharpWindow>(sw);
    switch (c) {
      case ResponseComponent::F11: return f11_sharp(dw, w, eps, g.alpha1).value;
      case ResponseComponent::F22: return f22_sharp(dw, w, eps, g).value;
      case ResponseComponent::F21: return f21_sharp(dw, w, g, eps).value;
    }
  }
  const auto& w = std::get<GaussianWindow>(sw);
  switch (c) {
    case ResponseComponent::F11: return f11_gaussian_quad(dw, w, eps, g.alpha1).value;
    case ResponseComponent::F22: return f22_gaussian_quad(dw, w, eps, g).value;
    case ResponseComponent::F21: return f21_gaussian_quad(dw, w, g, eps).value;
  }
  return {};
}

SwitchingProfile with_dt(const SwitchingProfile& sw, double dt) {
  if (std::holds_alternative<SharpWindow>(sw)) {
    return SharpWindow::centered(dt, std::get<SharpWindow>(sw).t_center());
  }
  const auto& w = std::get<GaussianWindow>(sw);
  return GaussianWindow(w.center_tau, dt / kSqrt2Pi);
}

}  // namespace

double rate_numeric(ResponseComponent component, double dw, const SwitchingProfile& sw,
                    const DetectorGeometry& g, double eps) {
  const double dt = effective_dt(sw);
  const double h = 1e-4 * dt;
  if (!(dt + h > dt)) throw DomainError("rate_numeric: difference step underflow");
  const Complex up = eval_component(component, dw, with_dt(sw, dt + h), g, eps);
  const Complex dn = eval_component(component, dw, with_dt(sw, dt - h), g, eps);
  return ((up - dn) / (2.0 * h)).real();
}

double r11_asymptotic(double dw, double alpha1) {
  if (!(alpha1 > 0.0)) throw DomainError("r11_asymptotic: alpha1 must be > 0");
  const double adw = std::abs(dw);
  if (adw == 0.0) return 0.0;
  const double n = planck_factor(alpha1 * adw);
  const double bracket = heaviside(-dw) * (1.0 + n) + heaviside(dw) * n;
  return adw / (2.0 * kPi) * bracket;
}

double r21_asymptotic_equal_acc(double dw, double alpha, double phi, SwitchFlavor flavor) {
  if (!(phi > 0.0)) throw DomainError("r21_asymptotic_equal_acc: requires phi > 0");
  if (!(alpha > 0.0)) throw DomainError("r21_asymptotic_equal_acc: alpha must be > 0");
  const double adw = std::abs(dw);
  if (adw == 0.0) return 0.0;
  const double c = flavor == SwitchFlavor::Sharp ? 2.0 : 4.0;
  const double n = planck_factor(alpha * adw);
  const double bracket = heaviside(-dw) * (1.0 + n) + heaviside(dw) * n;
  return std::sin(adw * alpha * phi) / (c * kPi * alpha * std::sinh(phi)) * bracket;
}

RateBundle total_rate(const TransitionSpec& ts, const SwitchingProfile& sw,
                      const DetectorGeometry& g, double eps) {
  const double dw = ts.dw();
  RateBundle out;
  if (std::holds_alternative<SharpWindow>(sw)) {
    const auto& w = std::get<SharpWindow>(sw);
    out.r11 = r11_sharp_rate(dw, w, eps, g.alpha1);
    out.r22 = r11_sharp_rate(g.time_dilation() * dw, w, eps, g.alpha1);
    out.re_r12 = r21_sharp_rate(dw, w, g, eps).real();
  } else {
    out.r11 = rate_numeric(ResponseComponent::F11, dw, sw, g, eps);
    out.r22 = rate_numeric(ResponseComponent::F22, dw, sw, g, eps);
    out.re_r12 = rate_numeric(ResponseComponent::F21, dw, sw, g, eps);
  }
  out.total = (ts.mu * ts.mu / 2.0) * (out.r11 + out.r22 + 2.0 * out.re_r12);
  return out;
}

double interference_factor(double x) {
  const double ax = std::abs(x);
  const double sinc = ax < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
  return 2.0 * (1.0 + sinc);
}

double mean_life(const TransitionSpec& ts, const SwitchingProfile& sw, const DetectorGeometry& g,
                 double eps) {
  if (ts.direction != Direction::Decay) {
    throw DomainError("mean_life: defined for the Decay direction (dw = -omega0)");
  }
  const RateBundle b = total_rate(ts, sw, g, eps);
  if (!(b.total > 0.0)) throw NonPositiveRateError(b.total);
  return 1.0 / b.total;
}

double mean_life_dimensionless(const TransitionSpec& ts, const SwitchingProfile& sw,
                               const DetectorGeometry& g, double eps) {
  return ts.mu * ts.mu * std::abs(ts.dw()) * mean_life(ts, sw, g, eps) / 2.0;
}

}  // namespace adr
