#include "adr/oracle.hpp"

#include <cmath>

#include "adr/wightman.hpp"

namespace adr {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Window {
  double lo, hi;             // integration range in tau1 for both variables
  std::function<double(double)> chi;
};

Window make_window(const SwitchingProfile& sw) {
  if (std::holds_alternative<SharpWindow>(sw)) {
    const auto& w = std::get<SharpWindow>(sw);
    return {w.tau0, w.tauf, [](double) { return 1.0; }};
  }
  const auto& w = std::get<GaussianWindow>(sw);
  const double c = w.center_tau, z = w.zeta;
  return {c - 8.0 * z, c + 8.0 * z,
          [c, z](double t) { return std::exp(-(t - c) * (t - c) / (z * z)); }};
}

}  // namespace

Complex response_2d_bruteforce(int i, int j, const SwitchingProfile& sw, double dw,
                               const DetectorGeometry& g, double eps,
                               const QuadratureControl& qc) {
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) {
    throw DomainError("response_2d_bruteforce: atom indices must be 1 or 2");
  }
  const Regulator reg = Regulator::physical(eps);
  const double r = g.time_dilation();
  const double ci = (i == 2) ? r : 1.0;  // d tau_i / d tau1 and phase scale
  const double cj = (j == 2) ? r : 1.0;
  const Window w = make_window(sw);

  auto kernel = [&](double psi) -> Complex {
    if (i == j) return (i == 1) ? g11_plus(psi, g.alpha1, reg) : g22_plus(psi, g, reg);
    return g_cross(psi, g, reg);
  };

  QuadratureControl inner_qc = qc;
  inner_qc.rel_tol = std::max(qc.rel_tol * 0.1, 1e-13);

  auto inner = [&](double t1) -> Complex {
    auto f = [&](double t1p) {
      return std::exp(-kI * dw * (ci * t1 - cj * t1p)) * w.chi(t1) * w.chi(t1p) *
             kernel(t1 - t1p);
    };
    // kernel peak along t1p = t1 at scale eps
    std::vector<double> extra;
    for (double s : {0.0, eps, -eps, 4.0 * eps, -4.0 * eps, 16.0 * eps, -16.0 * eps,
                     g.alpha1, -g.alpha1}) {
      extra.push_back(t1 - s);
    }
    DerivedRapidity rp = rapidity_phi(g);
    if (i != j && rp.phi > 0.0) {
      extra.push_back(t1 - g.alpha1 * rp.phi);
      extra.push_back(t1 + g.alpha1 * rp.phi);
    }
    auto breaks = merge_breaks(oscillation_breaks(w.lo, w.hi, dw * cj), extra);
    QuadResult q = integrate_panels(f, breaks, inner_qc);
    if (!q.converged) throw ConvergenceError("response_2d_bruteforce: inner integral");
    return q.value;
  };

  auto breaks = oscillation_breaks(w.lo, w.hi, dw * ci);
  QuadResult q = integrate_panels(inner, breaks, qc);
  if (!q.converged) throw ConvergenceError("response_2d_bruteforce: outer integral");
  return ci * cj * q.value;
}

Complex response_1d_reduced_f11(double dw, const SharpWindow& sw, double eps, double alpha1,
                                const QuadratureControl& qc) {
  const Regulator reg = Regulator::physical(eps);
  const double dt = sw.dt();
  auto f = [&](double psi) {
    return (dt - std::abs(psi)) * std::exp(-kI * dw * psi) * g11_plus(psi, alpha1, reg);
  };
  std::vector<double> extra{0.0};
  for (double s : {eps, 4.0 * eps, 16.0 * eps, 64.0 * eps, alpha1}) {
    extra.push_back(s);
    extra.push_back(-s);
  }
  auto breaks = merge_breaks(oscillation_breaks(-dt, dt, dw), extra);
  QuadResult q = integrate_panels(f, breaks, qc);
  if (!q.converged) throw ConvergenceError("response_1d_reduced_f11 did not converge");
  return q.value;
}

Complex halfline_bruteforce(double dw, double sigma, const DetectorGeometry& g, double eps,
                            EpsSign es, const QuadratureControl& qc) {
  const double se = (es == EpsSign::Plus) ? eps : -eps;
  const double hi = qc.tail_cut * g.alpha1;
  auto f = [&](double psi) {
    return std::exp(-kI * sigma * dw * psi) * cross_kernel_c0(psi, g, se);
  };
  DerivedRapidity rp = rapidity_phi(g);
  std::vector<double> extra;
  for (double s : {eps, 4.0 * eps, g.alpha1 * rp.phi - 4.0 * eps, g.alpha1 * rp.phi,
                   g.alpha1 * rp.phi + 4.0 * eps, g.alpha1}) {
    extra.push_back(s);
  }
  auto breaks = merge_breaks(oscillation_breaks(0.0, hi, sigma * dw), extra);
  QuadResult q = integrate_panels(f, breaks, qc);
  if (!q.converged) throw ConvergenceError("halfline_bruteforce did not converge");
  return q.value;
}

}  // namespace adr
