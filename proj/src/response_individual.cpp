#include "adr/response_individual.hpp"

#include <cmath>
#include <functional>

#include "adr/specfun.hpp"
#include "adr/wightman.hpp"

namespace adr {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi2 = 2.0 * kPi * kPi;

// Subtracted integrand B(psi); regular at psi = 0, -> -(psi-2i eps)^{-2} at infinity.
Complex bracket_b(double psi, double eps, double alpha1) {
  Complex flat = Complex(psi, -2.0 * eps);
  Complex s = inv_sinh_sq(flat / (2.0 * alpha1)) / (4.0 * alpha1 * alpha1);
  return s - 1.0 / (flat * flat);
}

Complex sinh_part(double psi, double eps, double alpha1) {
  Complex flat = Complex(psi, -2.0 * eps);
  return inv_sinh_sq(flat / (2.0 * alpha1)) / (4.0 * alpha1 * alpha1);
}

std::vector<double> peak_breaks(double lo, double hi, double eps) {
  std::vector<double> ex;
  for (double s : {0.25, 1.0, 4.0, 16.0, 64.0}) {
    ex.push_back(eps * s);
    ex.push_back(-eps * s);
  }
  ex.push_back(0.0);
  std::vector<double> base{lo, hi};
  return merge_breaks(base, ex);
}

}  // namespace

double thermal_theta_terms(double dw, double eps, double alpha1) {
  const double adw = std::abs(dw);
  if (adw == 0.0) return 0.0;
  double out = 0.0;
  if (dw < 0.0) {
    out += std::exp(-2.0 * eps * adw) * kPi * adw * (1.0 + planck_factor(alpha1 * adw));
  } else {
    out += std::exp(2.0 * eps * dw) * kPi * dw * planck_factor(alpha1 * dw);
  }
  return out;
}

Complex flat_tail_integral(double dw, double dt, double eps) {
  Complex dte(dt, -2.0 * eps);
  Complex boundary = std::exp(-kI * dw * dt) / dte;
  if (dw == 0.0) return boundary;
  Complex z = kI * dw * dte;
  return boundary - kI * dw * std::exp(2.0 * eps * dw) * exp_integral_e1(z);
}

double p1_term(double dw, double dt, double eps) {
  if (!(dt > 0.0) || !(eps > 0.0)) throw DomainError("p1_term: need dt > 0 and eps > 0");
  return flat_tail_integral(dw, dt, eps).real();
}

double p2_term(double dw, double dt, double eps) {
  if (!(dt > 0.0) || !(eps > 0.0)) throw DomainError("p2_term: need dt > 0 and eps > 0");
  if (dw == 0.0) {
    // Re[log((dt-p)/(-p)) - p/(dt-p) - 1], p = 2 i eps
    double d2 = dt * dt + 4.0 * eps * eps;
    return 0.5 * std::log(d2 / (4.0 * eps * eps)) + 4.0 * eps * eps / d2 - 1.0;
  }
  const double den = dt * dt + 4.0 * eps * eps;
  const double t1 = -(den - 4.0 * eps * eps * std::cos(dt * dw) + 2.0 * dt * eps * std::sin(dt * dw)) / den;
  Complex bracket = exp_integral_ei(Complex(-2.0 * eps * dw, dt * dw)) +
                    exp_integral_ei(Complex(-2.0 * eps * dw, -dt * dw)) -
                    2.0 * exp_integral_ei(-2.0 * eps * dw);
  return t1 + std::exp(2.0 * dw * eps) * (2.0 * dw * eps + 1.0) / 2.0 * bracket.real();
}

Complex j_tail(JKind kind, double dw, double dt, double eps, double alpha1, double* err_estimate) {
  if (!(dt > 0.0)) throw DomainError("j_tail: need dt > 0");
  QuadratureControl qc;
  qc.rel_tol = 1e-12;
  qc.abs_tol = 1e-15;
  if (kind == JKind::J1) {
    const double hi = dt + qc.tail_cut * alpha1;
    auto f = [&](double psi) { return std::exp(-kI * dw * psi) * sinh_part(psi, eps, alpha1); };
    auto breaks = oscillation_breaks(dt, hi, dw);
    QuadResult q = integrate_panels(f, breaks, qc);
    if (!q.converged) throw ConvergenceError("j_tail: J1 quadrature did not converge");
    double trunc = 4.0 * alpha1 * std::exp(-qc.tail_cut) / (4.0 * alpha1 * alpha1);
    if (err_estimate) *err_estimate = q.err + trunc;
    return q.value - flat_tail_integral(dw, dt, eps);
  }
  auto f = [&](double psi) {
    return psi * std::exp(-kI * dw * psi) * bracket_b(psi, eps, alpha1);
  };
  auto breaks = merge_breaks(oscillation_breaks(0.0, dt, dw),
                             {eps, 4.0 * eps, 16.0 * eps, 0.5 * alpha1, alpha1, 4.0 * alpha1});
  QuadResult q = integrate_panels(f, breaks, qc);
  if (!q.converged) throw ConvergenceError("j_tail: J2 quadrature did not converge");
  if (err_estimate) *err_estimate = q.err;
  return q.value;
}

ResponseResult f11_sharp(double dw, const SharpWindow& sw, double eps, double alpha1) {
  if (!(eps > 0.0)) throw DomainError("f11_sharp: eps must be > 0");
  if (!(alpha1 > 0.0)) throw DomainError("f11_sharp: alpha1 must be > 0");
  const double dt = sw.dt();
  double e1 = 0.0, e2 = 0.0;
  const Complex j1 = j_tail(JKind::J1, dw, dt, eps, alpha1, &e1);
  const Complex j2 = j_tail(JKind::J2, dw, dt, eps, alpha1, &e2);
  const double theta = thermal_theta_terms(dw, eps, alpha1);
  const double val = dt / kTwoPi2 * (theta + p1_term(dw, dt, eps) + j1.real()) +
                     (p2_term(dw, dt, eps) + j2.real()) / kTwoPi2;
  ResponseResult r;
  r.value = Complex(val, 0.0);
  r.method = Method::ClosedForm;
  r.err_estimate = (dt * e1 + e2) / kTwoPi2 + 1e-13 * (std::abs(val) + dt * theta / kTwoPi2);
  r.advisory_domain = dt < 10.0 * eps;
  return r;
}

ResponseResult f22_sharp(double dw, const SharpWindow& sw, double eps, const DetectorGeometry& g) {
  return f11_sharp(g.time_dilation() * dw, sw, eps, g.alpha1);
}

ResponseResult f11_gaussian_quad(double dw, const GaussianWindow& sw, double eps, double alpha1) {
  if (!(eps > 0.0)) throw DomainError("f11_gaussian_quad: eps must be > 0");
  const double z = sw.zeta;
  const double L = 8.0 * z;
  auto f = [&](double psi) {
    Complex arg(psi / (2.0 * alpha1), -eps / alpha1);
    return std::exp(-kI * dw * psi) * std::exp(-psi * psi / (2.0 * z * z)) * inv_sinh_sq(arg);
  };
  QuadratureControl qc;
  qc.rel_tol = 1e-11;
  qc.abs_tol = 1e-16;
  std::vector<double> ex;
  for (double s : {eps, 4.0 * eps, 16.0 * eps, z, 2.0 * z, 4.0 * z, alpha1}) {
    ex.push_back(s);
    ex.push_back(-s);
  }
  ex.push_back(0.0);
  auto breaks = merge_breaks(oscillation_breaks(-L, L, dw), ex);
  QuadResult q = integrate_panels(f, breaks, qc);
  if (!q.converged) throw ConvergenceError("f11_gaussian_quad: quadrature did not converge");
  const double pref = -kSqrt2Pi * z / (32.0 * kPi * kPi * alpha1 * alpha1);
  ResponseResult r;
  r.value = pref * q.value;
  r.method = Method::Quadrature;
  r.err_estimate = std::abs(pref) * (q.err + 1e-13 * std::abs(q.value));
  return r;
}

ResponseResult f22_gaussian_quad(double dw, const GaussianWindow& sw, double eps,
                                 const DetectorGeometry& g) {
  return f11_gaussian_quad(g.time_dilation() * dw, sw, eps, g.alpha1);
}

namespace {

// x / (e^{c x} - 1), analytic through x = 0.
double x_over_expm1(double x, double c) {
  const double cx = c * x;
  if (std::abs(cx) < 1e-5) return (1.0 - cx / 2.0 + cx * cx / 12.0) / c;
  return x / std::expm1(cx);
}

// Theta-branch brackets of the large-zeta closed form, analytic in u so that
// finite-difference stencils may cross u = 0.
double gauss_f11_bracket_pos(double u, double eps, double alpha1) {
  return std::exp(2.0 * u * eps) * x_over_expm1(u, 2.0 * kPi * alpha1);
}
double gauss_f11_bracket_neg(double u, double eps, double alpha1) {
  return std::exp(-2.0 * u * eps) * (u + x_over_expm1(u, 2.0 * kPi * alpha1));
}

// Central finite-difference second derivative iterated k times.
double iterated_second_derivative(const std::function<double(double)>& f, double x, int k,
                                  double h) {
  if (k == 0) return f(x);
  auto g = [&](double y) { return iterated_second_derivative(f, y, k - 1, h); };
  return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
}

}  // namespace

ResponseResult f11_gaussian_asymptotic(double dw, const GaussianWindow& sw, double eps,
                                       double alpha1, int order) {
  if (!(sw.zeta >= 10.0 * eps)) {
    throw DomainError("f11_gaussian_asymptotic: requires zeta >= 10 eps");
  }
  if (order < 0 || order > 3) throw DomainError("f11_gaussian_asymptotic: order in [0,3]");
  const double z = sw.zeta;
  const bool decay = dw < 0.0;
  std::function<double(double)> bracket = [&](double u) {
    return decay ? gauss_f11_bracket_neg(u, eps, alpha1) : gauss_f11_bracket_pos(u, eps, alpha1);
  };
  const double u0 = std::abs(dw);
  const double h = 1e-3 * std::max(u0, 1.0);
  double sum = 0.0, fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    double dk = iterated_second_derivative(bracket, u0, k, h);
    sum += dk / (fact * std::pow(2.0 * z * z, k));
  }
  ResponseResult r;
  r.value = Complex(kSqrt2Pi * z / (4.0 * kPi) * sum, 0.0);
  r.method = Method::Asymptotic;
  // dominated by the first dropped correction
  double next = std::abs(iterated_second_derivative(bracket, u0, order + 1, h)) /
                ((fact * (order + 1)) * std::pow(2.0 * z * z, order + 1));
  r.err_estimate = kSqrt2Pi * z / (4.0 * kPi) * (next + 1e-10 * std::abs(sum));
  return r;
}

double r11_sharp_rate(double dw, const SharpWindow& sw, double eps, double alpha1,
                      double* err_estimate) {
  const double dt = sw.dt();
  double e1 = 0.0;
  const Complex j1 = j_tail(JKind::J1, dw, dt, eps, alpha1, &e1);
  const double theta = thermal_theta_terms(dw, eps, alpha1);
  const double p1 = p1_term(dw, dt, eps);

  // dP1/ddt = -Re[e^{-i dw dt} (dt-2i eps)^{-2}];  dP2/ddt = -dt * dP1/ddt  (Leibniz)
  Complex dte(dt, -2.0 * eps);
  const double dp1 = -(std::exp(-kI * dw * dt) / (dte * dte)).real();
  const double dp2 = dt * (std::exp(-kI * dw * dt) / (dte * dte)).real();

  // dJ1/ddt = -e^{-i dw dt} B(dt);  dJ2/ddt = +dt e^{-i dw dt} B(dt)
  const Complex edge = std::exp(-kI * dw * dt) * bracket_b(dt, eps, alpha1);
  const Complex dj1 = -edge;
  const Complex dj2 = dt * edge;

  if (err_estimate) *err_estimate = e1 / kTwoPi2 + 1e-13 * std::abs(theta);
  return (theta + p1 + dt * dp1 + j1.real() + dt * dj1.real() + dp2 + dj2.real()) / kTwoPi2;
}

}  // namespace adr
