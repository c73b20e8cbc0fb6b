#include "adr/response_crossed.hpp"

#include <cmath>
#include <functional>

#include "adr/quadrature.hpp"
#include "adr/specfun.hpp"
#include "adr/wightman.hpp"

namespace adr {
namespace {

constexpr Complex kI{0.0, 1.0};

struct Ctx {
  double alpha1, alpha2, a_plus, a_minus, phi, sh, c, eps, r;
};

Ctx make_ctx(const DetectorGeometry& g, double eps, const char* who) {
  if (!(eps > 0.0)) throw DomainError(std::string(who) + ": eps must be > 0");
  DerivedRapidity rp = rapidity_phi(g);
  if (!(rp.phi > 0.0)) {
    throw DomainError(std::string(who) + ": phi = 0 (coincident poles); use the limit path");
  }
  return {g.alpha1, g.alpha2,      rp.a_plus, rp.a_minus,         rp.phi,
          std::sinh(rp.phi), 8.0 * eps / rp.a_plus, eps, g.alpha2 / g.alpha1};
}

}  // namespace

double halfline_nonpole_m(double w, double c, double phi, bool* slow_convergence) {
  if (slow_convergence) *slow_convergence = false;
  if (w == 0.0) throw DomainError("halfline: sigma * dw must be nonzero");
  const double q = std::exp(-phi);
  const double cosc = std::cos(c), sinc = std::sin(c);
  double ck = 1.0, sk = 0.0;  // cos(kc), sin(kc) by rotation
  double qk = 1.0;
  double sum = 0.0;
  constexpr long kCap = 2000000;
  long k = 1;
  for (; k <= kCap; ++k) {
    qk *= q;
    const double cn = ck * cosc - sk * sinc;
    const double sn = sk * cosc + ck * sinc;
    ck = cn;
    sk = sn;
    const double term = qk * (w * ck - k * sk) / (w * w + static_cast<double>(k) * k);
    sum += term;
    if (qk * (std::abs(w) + k) / (w * w + static_cast<double>(k) * k) < 1e-16 * (1.0 + std::abs(sum)) &&
        k > 8) {
      break;
    }
  }
  if (k > kCap && slow_convergence) *slow_convergence = true;
  return -(1.0 / std::sinh(phi)) * (1.0 / w + 2.0 * sum);
}

namespace {

// A_{+-eps}(w) = int_0^inf e^{-i w u} du / (cosh(u -+ i c) - cosh(phi)).
Complex halfline_a(double w, double c, double phi, EpsSign es, bool* slow) {
  const double sh = std::sinh(phi);
  const double cc = (es == EpsSign::Plus) ? c : -c;
  if (w > 0.0) {
    double m = halfline_nonpole_m(w, cc, phi, slow);
    Complex pole = -(2.0 * kPi * kI / sh) * std::exp(Complex(w * cc, -w * phi));
    double occ = (es == EpsSign::Plus) ? planck_factor(w) : 1.0 + planck_factor(w);
    return -kI * m + pole * occ;
  }
  const double aw = -w;
  double m = halfline_nonpole_m(aw, -cc, phi, slow);
  Complex pole = (2.0 * kPi * kI / sh) * std::exp(Complex(-aw * cc, aw * phi));
  double occ = (es == EpsSign::Plus) ? 1.0 + planck_factor(aw) : planck_factor(aw);
  return kI * m + pole * occ;
}

}  // namespace

Complex half_line_integral(double dw, double sigma, const DetectorGeometry& g, double eps,
                           EpsSign es, bool* slow_convergence) {
  Ctx cx = make_ctx(g, eps, "half_line_integral");
  const double w = sigma * dw * cx.alpha1;
  if (w == 0.0) throw DomainError("half_line_integral: sigma * dw must be nonzero");
  return 2.0 * cx.alpha1 * halfline_a(w, cx.c, cx.phi, es, slow_convergence);
}

Complex half_line_integral_pole_only(double dw, double sigma, const DetectorGeometry& g,
                                     double eps, EpsSign es) {
  // sigma > 0 table; sigma < 0 via (dw, sigma) -> (-dw, -sigma).
  if (sigma < 0.0) return half_line_integral_pole_only(-dw, -sigma, g, eps, es);
  Ctx cx = make_ctx(g, eps, "half_line_integral_pole_only");
  const double ap = cx.a_plus, phi = cx.phi, sh = cx.sh, a1 = cx.alpha1;
  auto chi = [&](double e) { return Complex(4.0 * e / (kPi * ap), phi / (2.0 * kPi)); };
  auto k1 = [&](double DW, double x, double e) {
    return -kPi / 2.0 * std::exp(8.0 * x * DW * e / ap) * std::exp(kI * x * DW * phi);
  };
  auto k2 = [&](double DW, double x, double e) {
    return kPi / 2.0 * std::exp(8.0 * x * DW * e / ap) * std::exp(-kI * x * DW * phi) *
           (-2.0 + 3.0 * std::exp(2.0 * kI * x * DW * phi));
  };
  const double adw = std::abs(dw);
  const double z = std::exp(-2.0 * kPi * a1 * sigma * adw);
  if (es == EpsSign::Plus) {
    if (dw < 0.0) {
      return (4.0 * kI * a1 / sh) *
             (k1(adw, sigma * a1, -eps) * (1.0 + planck_factor(a1 * sigma * adw)) +
              std::exp(Complex(8.0 * a1 * sigma * adw * eps / ap, -a1 * sigma * adw * phi)) *
                  lerch_phi_sderiv(z, chi(eps)).imag());
    }
    return -(4.0 * kI * a1 / sh) *
           (k2(dw, sigma * a1, eps) * planck_factor(a1 * sigma * dw) -
            std::exp(Complex(8.0 * a1 * sigma * dw * eps / ap, -a1 * sigma * dw * phi)) * z *
                lerch_phi_sderiv(z, 1.0 + chi(-eps)).imag());
  }
  if (dw < 0.0) {
    return (4.0 * kI * a1 / sh) *
           (k1(adw, sigma * a1, eps) * planck_factor(a1 * sigma * adw) +
            std::exp(Complex(-8.0 * a1 * sigma * adw * eps / ap, -a1 * sigma * adw * phi)) * z *
                lerch_phi_sderiv(z, 1.0 + chi(-eps)).imag());
  }
  return -(4.0 * kI * a1 / sh) *
         (k2(dw, sigma * a1, -eps) * (1.0 + planck_factor(a1 * sigma * dw)) -
          std::exp(Complex(-8.0 * a1 * sigma * dw * eps / ap, -a1 * sigma * dw * phi)) *
              lerch_phi_sderiv(z, chi(eps)).imag());
}

Complex script_a(double dw, const DetectorGeometry& g, double eps, bool swap) {
  Ctx cx = make_ctx(g, eps, "script_a");
  if (dw == 0.0) throw DomainError("script_a: dw must be nonzero");
  Complex sum;
  if (!swap) {
    sum = halfline_a(dw * cx.alpha1, cx.c, cx.phi, EpsSign::Plus, nullptr) +
          halfline_a(-dw * cx.alpha2, cx.c, cx.phi, EpsSign::Minus, nullptr);
  } else {
    sum = halfline_a(-dw * cx.alpha1, cx.c, cx.phi, EpsSign::Minus, nullptr) +
          halfline_a(dw * cx.alpha2, cx.c, cx.phi, EpsSign::Plus, nullptr);
  }
  return -kI * (cx.sh / 2.0) * sum;
}

namespace {

Complex tail_integral(double freq, double dt, const DetectorGeometry& g, double eps_signed,
                      double* err) {
  QuadratureControl qc;
  qc.rel_tol = 1e-12;
  qc.abs_tol = 1e-16;
  const double a1 = g.alpha1;
  const double hi = dt + qc.tail_cut * a1;
  auto f = [&](double psi) {
    return std::exp(-kI * freq * psi) * cross_kernel_c0(psi, g, eps_signed);
  };
  DerivedRapidity rp = rapidity_phi(g);
  auto breaks = merge_breaks(oscillation_breaks(dt, hi, freq),
                             {a1 * rp.phi, a1 * rp.phi + 4.0 * eps_signed, dt + a1, dt + 4.0 * a1});
  QuadResult q = integrate_panels(f, breaks, qc);
  if (!q.converged) throw ConvergenceError("crossed tail quadrature did not converge");
  if (err) *err = q.err + 8.0 * a1 * std::exp(-qc.tail_cut + rp.phi);
  return q.value;
}

}  // namespace

Complex script_i_tail(double dw, double dt, const DetectorGeometry& g, double eps,
                      double* err_estimate) {
  Ctx cx = make_ctx(g, eps, "script_i_tail");
  if (!(dt > 0.0)) throw DomainError("script_i_tail: dt must be > 0");
  double e1 = 0.0, e2 = 0.0;
  Complex t1 = tail_integral(dw, dt, g, eps, &e1);
  Complex t2 = tail_integral(-cx.r * dw, dt, g, -eps, &e2);
  if (err_estimate) *err_estimate = (cx.sh / (4.0 * cx.alpha1)) * (e1 + e2);
  return kI * (cx.sh / (4.0 * cx.alpha1)) * (t1 + t2);
}

namespace {

struct Assembled {
  Complex a12, a21, tails;
  double err;
};

Assembled assemble_parts(double dw, double dt, const DetectorGeometry& g, double eps) {
  Assembled out;
  out.a12 = script_a(dw, g, eps, false);
  out.a21 = script_a(dw, g, eps, true);
  out.tails = script_i_tail(dw, dt, g, eps, &out.err);
  return out;
}

Complex f21_bracket(double dw, double dt, double T, const DetectorGeometry& g, double eps) {
  Ctx cx = make_ctx(g, eps, "f21_sharp");
  Assembled p = assemble_parts(dw, dt, g, eps);
  const double thp = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt + 2.0 * T);
  const double thm = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt - 2.0 * T);
  return std::exp(-kI * thp) * (p.a12 + p.tails) +
         std::exp(kI * thm) * (-p.a21 + std::conj(p.tails));
}

DetectorGeometry geometry_at_split(double alpha, double phi, double am) {
  const double a1 = alpha - am / 2.0;
  const double a2 = alpha + am / 2.0;
  const double dx2 = 2.0 * a1 * a2 * (std::cosh(phi) - 1.0) - am * am;
  if (!(dx2 > 0.0)) throw DomainError("equal-acc path: phi too small for this split");
  return {a1, a2, std::sqrt(dx2)};
}

}  // namespace

ResponseResult f21_sharp(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps) {
  if (dw == 0.0) throw DomainError("f21_sharp: dw must be nonzero");
  DerivedRapidity rp = rapidity_phi(g);
  if (std::abs(rp.a_minus) < 1e-6 * rp.a_plus) {
    const double alpha = rp.a_plus / 2.0;
    return f21_sharp_equal_acc(dw, sw, alpha, rp.phi, eps);
  }
  Ctx cx = make_ctx(g, eps, "f21_sharp");
  const double dt = sw.dt();
  const double T = sw.t_center();
  Assembled p = assemble_parts(dw, dt, g, eps);
  const double thp = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt + 2.0 * T);
  const double thm = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt - 2.0 * T);
  const Complex bracket = std::exp(-kI * thp) * (p.a12 + p.tails) +
                          std::exp(kI * thm) * (-p.a21 + std::conj(p.tails));
  const double pref = 1.0 / (4.0 * kPi * kPi * cx.sh * dw * cx.a_minus);
  ResponseResult r;
  r.value = pref * bracket;
  r.method = Method::ClosedForm;
  r.err_estimate = std::abs(pref) * (2.0 * p.err + 1e-13 * std::abs(bracket));
  r.advisory_domain = dt < 10.0 * eps;
  return r;
}

ResponseResult f12_sharp(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps) {
  ResponseResult r = f21_sharp(dw, sw, g, eps);
  r.value = std::conj(r.value);
  return r;
}

ResponseResult f21_sharp_equal_acc(double dw, const SharpWindow& sw, double alpha, double phi,
                                   double eps) {
  if (!(phi > 0.0)) throw DomainError("f21_sharp_equal_acc: requires phi > 0");
  if (dw == 0.0) throw DomainError("f21_sharp_equal_acc: dw must be nonzero");
  const double dt = sw.dt();
  const double T = sw.t_center();
  const double phase_scale = 2.0 * alpha / (std::abs(dw) * (dt + 2.0 * std::abs(T)) + 1.0);
  const double h = std::min(1e-3 * alpha, 0.05 * phase_scale);
  auto B = [&](double am) {
    return f21_bracket(dw, dt, T, geometry_at_split(alpha, phi, am), eps);
  };
  const Complex dB =
      (8.0 * (B(h) - B(-h)) - (B(2.0 * h) - B(-2.0 * h))) / (12.0 * h);
  const double pref = 1.0 / (4.0 * kPi * kPi * std::sinh(phi) * dw);
  ResponseResult r;
  r.value = pref * dB;
  r.method = Method::ClosedForm;
  r.err_estimate = std::abs(pref) * std::abs(dB) * 1e-9;
  r.advisory_domain = dt < 10.0 * eps;
  return r;
}

ResponseResult f21_gaussian_quad(double dw, const GaussianWindow& sw, const DetectorGeometry& g,
                                 double eps) {
  Ctx cx = make_ctx(g, eps, "f21_gaussian_quad");
  const double z = sw.zeta;
  const double L = 8.0 * z + 5.0 * cx.alpha1;
  const double W = dw * cx.a_plus / (2.0 * cx.alpha1);
  auto f = [&](double psi) {
    return std::exp(-kI * W * psi) * std::exp(-psi * psi / (2.0 * z * z)) *
           cross_kernel_c0(psi, g, eps);
  };
  QuadratureControl qc;
  qc.rel_tol = 1e-11;
  qc.abs_tol = 1e-16;
  std::vector<double> ex{0.0};
  for (double s : {eps, 4.0 * eps, z, 2.0 * z, 4.0 * z, cx.alpha1 * cx.phi,
                   cx.alpha1 * cx.phi + 4.0 * eps, cx.alpha1}) {
    ex.push_back(s);
    ex.push_back(-s);
  }
  QuadResult q = integrate_panels(f, merge_breaks(oscillation_breaks(-L, L, W), ex), qc);
  if (!q.converged) throw ConvergenceError("f21_gaussian_quad: quadrature did not converge");
  const Complex P = (cx.a_minus * dw / (8.0 * cx.alpha1 * cx.alpha1)) *
                    Complex(cx.a_minus * z * z * dw, 8.0 * cx.alpha1 * sw.center_tau);
  const Complex pref =
      -kSqrt2Pi * z / (32.0 * kPi * kPi * cx.alpha1 * cx.alpha1) * std::exp(-P);
  ResponseResult r;
  r.value = pref * q.value;
  r.method = Method::Quadrature;
  r.err_estimate = std::abs(pref) * (q.err + 1e-13 * std::abs(q.value));
  return r;
}

namespace {

double iterated_second_derivative_cross(const std::function<double(double)>& f, double x, int k,
                                         double h) {
  if (k == 0) return f(x);
  auto g2 = [&](double y) { return iterated_second_derivative_cross(f, y, k - 1, h); };
  return (g2(x + h) - 2.0 * g2(x) + g2(x - h)) / (h * h);
}

// sin(u phi) e^{s_c u c} / (branch Planck denominator), analytic through u = 0.
double gauss_cross_bracket(double u, double c, double phi, bool excitation) {
  // excitation: sin(u phi) e^{+u c} / (e^{2 pi u} - 1)
  // decay:      sin(u phi) e^{-u c} / (1 - e^{-2 pi u})
  if (excitation) {
    if (std::abs(u) < 1e-6) {
      return std::exp(u * c) * (phi / (2.0 * kPi)) * (1.0 - kPi * u) *
             (1.0 - (u * phi) * (u * phi) / 6.0);
    }
    return std::sin(u * phi) * std::exp(u * c) / std::expm1(2.0 * kPi * u);
  }
  if (std::abs(u) < 1e-6) {
    return std::exp(-u * c) * (phi / (2.0 * kPi)) * (1.0 + kPi * u) *
           (1.0 - (u * phi) * (u * phi) / 6.0);
  }
  return std::sin(u * phi) * std::exp(-u * c) / (-std::expm1(-2.0 * kPi * u));
}

}  // namespace

ResponseResult f21_gaussian_asymptotic(double dw, const GaussianWindow& sw,
                                       const DetectorGeometry& g, double eps, int order) {
  Ctx cx = make_ctx(g, eps, "f21_gaussian_asymptotic");
  if (!(sw.zeta >= 10.0 * eps)) {
    throw DomainError("f21_gaussian_asymptotic: requires zeta >= 10 eps");
  }
  if (order < 0 || order > 3) throw DomainError("f21_gaussian_asymptotic: order in [0,3]");
  const double z = sw.zeta;
  const bool excitation = dw >= 0.0;
  // full-line transform of the bare kernel at frequency a+ u / (2 a1), u = |dw|:
  //   2 a1 * (-4 pi / sinh phi) * bracket(w~),  w~ = u a+ / 2
  auto bracket = [&](double u) {
    const double wt = u * cx.a_plus / 2.0;
    return 2.0 * cx.alpha1 * (-4.0 * kPi / cx.sh) *
           gauss_cross_bracket(wt, cx.c, cx.phi, excitation);
  };
  const double u0 = std::abs(dw);
  const double h = 1e-3 * std::max(u0, 1.0);
  const double dcoef = 2.0 * cx.alpha1 * cx.alpha1 / (cx.a_plus * cx.a_plus * z * z);
  // D acts through u = |dw|; d^2/d(dw)^2 = d^2/du^2
  double sum = 0.0, fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    std::function<double(double)> fb = bracket;
    sum += iterated_second_derivative_cross(fb, u0, k, h) * std::pow(dcoef, k) / fact;
  }
  const Complex P = (cx.a_minus * dw / (8.0 * cx.alpha1 * cx.alpha1)) *
                    Complex(cx.a_minus * z * z * dw, 8.0 * cx.alpha1 * sw.center_tau);
  const Complex pref =
      -kSqrt2Pi * z / (32.0 * kPi * kPi * cx.alpha1 * cx.alpha1) * std::exp(-P);
  ResponseResult r;
  r.value = pref * sum;
  r.method = Method::Asymptotic;
  std::function<double(double)> fb = bracket;
  double next = std::abs(iterated_second_derivative_cross(fb, u0, order + 1, h)) *
                std::pow(dcoef, order + 1) / (fact * (order + 1));
  r.err_estimate = std::abs(pref) * (next + 1e-9 * std::abs(sum));
  return r;
}

Complex r21_sharp_rate(double dw, const SharpWindow& sw, const DetectorGeometry& g, double eps) {
  if (dw == 0.0) throw DomainError("r21_sharp_rate: dw must be nonzero");
  DerivedRapidity rp = rapidity_phi(g);
  const double dt = sw.dt();
  if (std::abs(rp.a_minus) < 1e-6 * rp.a_plus) {
    const double alpha = rp.a_plus / 2.0;
    const double h = 1e-4 * dt;
    SharpWindow up = SharpWindow::centered(dt + h, sw.t_center());
    SharpWindow dn = SharpWindow::centered(dt - h, sw.t_center());
    return (f21_sharp_equal_acc(dw, up, alpha, rp.phi, eps).value -
            f21_sharp_equal_acc(dw, dn, alpha, rp.phi, eps).value) /
           (2.0 * h);
  }
  Ctx cx = make_ctx(g, eps, "r21_sharp_rate");
  const double T = sw.t_center();
  Assembled p = assemble_parts(dw, dt, g, eps);
  const double k = dw * cx.a_minus / (2.0 * cx.alpha1);  // d theta/d dt
  const double thp = k * (dt + 2.0 * T);
  const double thm = k * (dt - 2.0 * T);
  // dI/ddt: the lower limit of both tails advances
  const Complex di = kI * (cx.sh / (4.0 * cx.alpha1)) *
                     (-std::exp(-kI * dw * dt) * cross_kernel_c0(dt, g, eps) -
                      std::exp(kI * cx.r * dw * dt) * cross_kernel_c0(dt, g, -eps));
  const Complex term1 =
      std::exp(-kI * thp) * (-kI * k * (p.a12 + p.tails) + di);
  const Complex term2 =
      std::exp(kI * thm) * (kI * k * (-p.a21 + std::conj(p.tails)) + std::conj(di));
  const double pref = 1.0 / (4.0 * kPi * kPi * cx.sh * dw * cx.a_minus);
  return pref * (term1 + term2);
}

double re_f21_sharp_cos_sin(double dw, const SharpWindow& sw, const DetectorGeometry& g,
                            double eps) {
  Ctx cx = make_ctx(g, eps, "re_f21_sharp_cos_sin");
  if (dw == 0.0) throw DomainError("re_f21_sharp_cos_sin: dw must be nonzero");
  const double dt = sw.dt();
  const double T = sw.t_center();
  Assembled p = assemble_parts(dw, dt, g, eps);
  const Complex u = p.a12 + p.tails;
  const Complex v = -p.a21 + std::conj(p.tails);
  const double thp = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt + 2.0 * T);
  const double thm = dw * (cx.a_minus / (2.0 * cx.alpha1)) * (dt - 2.0 * T);
  const double pref = 1.0 / (4.0 * kPi * kPi * cx.sh * dw * cx.a_minus);
  return pref * (std::cos(thp) * u.real() + std::sin(thp) * u.imag() +
                 std::cos(thm) * v.real() - std::sin(thm) * v.imag());
}

CrossClosedFormParts cross_closed_form_parts(double dw, const SharpWindow& sw,
                                             const DetectorGeometry& g, double eps) {
  Ctx cx = make_ctx(g, eps, "cross_closed_form_parts");
  CrossClosedFormParts out;
  out.lerch_arg = Complex(4.0 * eps / (kPi * cx.a_plus), cx.phi / (2.0 * kPi));
  const double adw = std::abs(dw);
  out.kappa1 = -kPi / 2.0 *
               std::exp(Complex(8.0 * cx.alpha2 * adw * eps / cx.a_plus, cx.alpha2 * adw * cx.phi));
  out.kappa2 = kPi / 2.0 *
               std::exp(Complex(8.0 * cx.alpha1 * adw * eps / cx.a_plus, -cx.alpha1 * adw * cx.phi)) *
               (-2.0 + 3.0 * std::exp(2.0 * kI * cx.alpha1 * adw * cx.phi));
  // Lambda_delta arguments follow the sign of dw
  const double delta = dw > 0.0 ? 1.0 : 0.0;
  const double x = dw > 0.0 ? cx.alpha2 : cx.alpha1;
  const double y = dw > 0.0 ? cx.alpha1 : cx.alpha2;
  const double es = dw > 0.0 ? eps : -eps;
  auto lam_piece = [&](double xx) {
    const double zx = std::exp(-2.0 * kPi * xx * adw);
    Complex chi_m(-4.0 * es / (kPi * cx.a_plus), cx.phi / (2.0 * kPi));
    return std::exp(Complex(8.0 * xx * adw * es / cx.a_plus, -xx * adw * cx.phi)) *
           std::exp(-2.0 * kPi * xx * delta * adw) *
           lerch_phi_sderiv(zx, delta + chi_m).imag();
  };
  out.lambda_delta = lam_piece(x) - lam_piece(y);
  out.script_a = script_a(dw, g, eps, false);
  out.script_i = script_i_tail(dw, sw.dt(), g, eps);
  return out;
}

}  // namespace adr
