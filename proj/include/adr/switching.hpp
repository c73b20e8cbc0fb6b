#pragma once

#include <variant>

#include "adr/types.hpp"

namespace adr {

// Sharp window on [tau0, tauf].
struct SharpWindow {
  double tau0 = 0.0;
  double tauf = 1.0;

  SharpWindow() = default;
  SharpWindow(double t0, double tf) : tau0(t0), tauf(tf) {
    if (!(tauf > tau0)) throw DomainError("sharp window: tauf must exceed tau0");
  }
  static SharpWindow centered(double dt, double t_center = 0.0) {
    return {t_center - dt / 2.0, t_center + dt / 2.0};
  }
  double dt() const { return tauf - tau0; }
  double t_center() const { return 0.5 * (tauf + tau0); }
};

// Gaussian profile exp(-(tau - center)^2 / zeta^2); effective duration sqrt(2 pi) zeta.
struct GaussianWindow {
  double center_tau = 0.0;
  double zeta = 1.0;

  GaussianWindow() = default;
  GaussianWindow(double c, double z) : center_tau(c), zeta(z) {
    if (!(zeta > 0.0)) throw DomainError("gaussian window: zeta must be > 0");
  }
  double dt() const { return kSqrt2Pi * zeta; }
};

using SwitchingProfile = std::variant<SharpWindow, GaussianWindow>;

inline double effective_dt(const SwitchingProfile& sw) {
  return std::visit([](const auto& w) { return w.dt(); }, sw);
}

}  // namespace adr
