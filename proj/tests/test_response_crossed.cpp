#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "adr/oracle.hpp"
#include "adr/rates.hpp"
#include "adr/response_crossed.hpp"
#include "adr/response_individual.hpp"
#include "doctest.h"

using adr::Complex;
using adr::DetectorGeometry;
using adr::EpsSign;
using adr::kPi;
using adr::SharpWindow;

namespace {
adr::QuadratureControl tight() {
  adr::QuadratureControl qc;
  qc.rel_tol = 1e-11;
  qc.abs_tol = 1e-18;
  qc.tail_cut = 60.0;
  return qc;
}
}  // namespace

TEST_CASE("half-line closed form vs quadrature, all eight sign branches") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  double eps = 0.03;
  for (double dw : {0.7, -0.7}) {
    for (double sigma : {1.0, -1.3}) {
      for (EpsSign es : {EpsSign::Plus, EpsSign::Minus}) {
        Complex closed = adr::half_line_integral(dw, sigma, g, eps, es);
        Complex oracle = adr::halfline_bruteforce(dw, sigma, g, eps, es, tight());
        INFO("dw=", dw, " sigma=", sigma, " es=", es == EpsSign::Plus ? "+" : "-");
        CHECK(std::abs(closed - oracle) / std::abs(oracle) < 1e-8);
      }
    }
  }
}

TEST_CASE("half-line sign symmetry and thermal factor") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  double eps = 0.03;
  // value at (sigma, dw) equals value at (-sigma, -dw)
  Complex a = adr::half_line_integral(0.7, 1.0, g, eps, EpsSign::Plus);
  Complex b = adr::half_line_integral(-0.7, -1.0, g, eps, EpsSign::Plus);
  CHECK(std::abs(a - b) < 1e-14 * std::abs(a));
  // conjugation: HL(s, -eps) = conj HL(-s, +eps)
  Complex c = adr::half_line_integral(0.7, 1.0, g, eps, EpsSign::Minus);
  Complex d = adr::half_line_integral(-0.7, 1.0, g, eps, EpsSign::Plus);
  CHECK(std::abs(c - std::conj(d)) < 1e-13 * std::abs(c));

  // Planck structure at large sigma dw: pole term ratio carries the thermal
  // occupation (cutoff-dressed by e^{w c}; pure Planck as eps -> 0)
  auto rp = adr::rapidity_phi(g);
  auto pole_part = [&](double s, double ee) {
    Complex full = adr::half_line_integral(1.0, s, g, ee, EpsSign::Plus);
    bool slow = false;
    double m = adr::halfline_nonpole_m(s * g.alpha1, 8.0 * ee / rp.a_plus, rp.phi, &slow);
    return full - 2.0 * g.alpha1 * Complex(0.0, -m);
  };
  double s1 = 2.0, s2 = 2.5;
  const double cdress = 8.0 * eps / rp.a_plus;
  double ratio = std::abs(pole_part(s2, eps)) / std::abs(pole_part(s1, eps));
  double dressed = adr::planck_factor(s2 * g.alpha1) * std::exp(s2 * g.alpha1 * cdress) /
                   (adr::planck_factor(s1 * g.alpha1) * std::exp(s1 * g.alpha1 * cdress));
  CHECK(std::abs(ratio / dressed - 1.0) < 1e-10);
  double tiny_eps = 1e-4;
  double ratio0 = std::abs(pole_part(s2, tiny_eps)) / std::abs(pole_part(s1, tiny_eps));
  double planck = adr::planck_factor(s2 * g.alpha1) / adr::planck_factor(s1 * g.alpha1);
  CHECK(std::abs(ratio0 / planck - 1.0) < 0.01);
}

TEST_CASE("pole-only half-line form misses the non-pole part") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  double eps = 0.03;
  double worst = 0.0;
  for (double dw : {0.7, -0.7}) {
    for (EpsSign es : {EpsSign::Plus, EpsSign::Minus}) {
      Complex printed = adr::half_line_integral_pole_only(dw, 1.0, g, eps, es);
      Complex oracle = adr::halfline_bruteforce(dw, 1.0, g, eps, es, tight());
      worst = std::max(worst, std::abs(printed - oracle));
    }
  }
  // without the non-pole series the values are off by O(1)
  CHECK(worst > 1.0);
}

TEST_CASE("near-coincident world lines flag slow convergence") {
  // phi -> 0 makes the non-pole series converge arbitrarily slowly; the
  // warning is reported instead of an error
  DetectorGeometry g(1.0, 1.0, 1e-6);
  bool slow = false;
  adr::half_line_integral(1.0, 1.0, g, 0.03, EpsSign::Plus, &slow);
  CHECK(slow);
  DetectorGeometry ok(1.0, 1.5, 0.3);
  slow = true;
  adr::half_line_integral(1.0, 1.0, ok, 0.03, EpsSign::Plus, &slow);
  CHECK_FALSE(slow);
}

TEST_CASE("script-A properties") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  double eps = 0.03, dw = 1.0;
  Complex a12 = adr::script_a(dw, g, eps, false);
  Complex a21 = adr::script_a(dw, g, eps, true);
  // the swap exchanges the alpha roles
  DetectorGeometry gs(1.5, 1.0, 0.3);
  CHECK(std::abs(a21 - adr::script_a(dw, gs, eps, false)) < 1e-13 * std::abs(a21));
  // equal accelerations: A12 = A21 exactly
  DetectorGeometry geq(1.2, 1.2, 0.4);
  CHECK(std::abs(adr::script_a(dw, geq, eps, false) - adr::script_a(dw, geq, eps, true)) <
        1e-13 * std::abs(adr::script_a(dw, geq, eps, false)));
  CHECK(a12 != a21);
}

TEST_CASE("script-I tail properties") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  double eps = 0.03, dw = 1.0;
  // exponential decay in dt
  Complex far = adr::script_i_tail(dw, 40.0 * g.alpha1, g, eps);
  CHECK(std::abs(far) < 1e-10);
  // dt -> 0 recovers the full half-line combination
  Complex near0 = adr::script_i_tail(dw, 1e-9, g, eps);
  auto rp = adr::rapidity_phi(g);
  Complex whole = Complex(0.0, 1.0) * (std::sinh(rp.phi) / (4.0 * g.alpha1)) *
                  (adr::half_line_integral(dw, 1.0, g, eps, EpsSign::Plus) +
                   adr::half_line_integral(dw, -g.alpha2 / g.alpha1, g, eps, EpsSign::Minus));
  CHECK(std::abs(near0 - whole) < 1e-7 * std::abs(whole));
  // equal accelerations: I is purely imaginary
  DetectorGeometry geq(1.0, 1.0, 0.4);
  Complex ieq = adr::script_i_tail(dw, 2.0, geq, eps);
  CHECK(std::abs(ieq.real()) < 1e-12 * std::abs(ieq));
}

TEST_CASE("f21 sharp vs 2-D oracle") {
  double eps = 0.03;
  SharpWindow w = SharpWindow::centered(3.0);
  DetectorGeometry g(1.0, 1.4, 0.3);
  Complex oracle = adr::response_2d_bruteforce(2, 1, w, 1.0, g, eps, tight());
  auto closed = adr::f21_sharp(1.0, w, g, eps);
  CHECK(std::abs(closed.value - oracle) / std::abs(oracle) < 1e-6);

  // f12 = conj(f21)
  auto f12 = adr::f12_sharp(1.0, w, g, eps);
  CHECK(std::abs(f12.value - std::conj(closed.value)) == 0.0);
  Complex oracle12 = adr::response_2d_bruteforce(1, 2, w, 1.0, g, eps, tight());
  CHECK(std::abs(oracle12 - std::conj(oracle)) < 1e-8 * std::abs(oracle));

  // real-part cos/sin assembly equals Re of the complex assembly
  double re2 = adr::re_f21_sharp_cos_sin(1.0, w, g, eps);
  CHECK(std::abs(re2 - closed.value.real()) <= 1e-10 * std::max(1.0, std::abs(re2)));

  // nonzero window center
  SharpWindow wt(0.2, 3.2);
  Complex oracle_t = adr::response_2d_bruteforce(2, 1, wt, 1.0, g, eps, tight());
  auto closed_t = adr::f21_sharp(1.0, wt, g, eps);
  CHECK(std::abs(closed_t.value - oracle_t) / std::abs(oracle_t) < 1e-6);
}

TEST_CASE("f21 sharp equal-acceleration limit path") {
  double eps = 0.03, dw = 1.0, alpha = 1.0;
  SharpWindow w = SharpWindow::centered(3.0);
  DetectorGeometry gref(alpha, alpha, 0.3);
  auto rp = adr::rapidity_phi(gref);
  auto limit = adr::f21_sharp_equal_acc(dw, w, alpha, rp.phi, eps);

  // the direct assembly converges linearly to the limit
  auto split = [&](double am) {
    double dx2 = 2.0 * (alpha - am / 2) * (alpha + am / 2) * (std::cosh(rp.phi) - 1.0) - am * am;
    return DetectorGeometry(alpha - am / 2, alpha + am / 2, std::sqrt(dx2));
  };
  double d4 = std::abs(adr::f21_sharp(dw, w, split(1e-4), eps).value - limit.value);
  double d5 = std::abs(adr::f21_sharp(dw, w, split(1e-5), eps).value - limit.value);
  CHECK(d5 / std::abs(limit.value) < 1e-6);
  CHECK(d4 / std::abs(limit.value) < 1e-4);
  CHECK(d4 / d5 == doctest::Approx(10.0).epsilon(0.25));

  // continuity contract at |a-|/a+ = 1e-4
  double am = 1e-4 * 2.0 * alpha;
  double rel = std::abs(adr::f21_sharp(dw, w, split(am), eps).value - limit.value) /
               std::abs(limit.value);
  CHECK(rel < 1e-5);

  // routed automatically below the threshold
  auto routed = adr::f21_sharp(dw, w, split(1e-7), eps);
  CHECK(std::abs(routed.value - limit.value) / std::abs(limit.value) < 1e-6);

  // 2-D oracle agreement of the limit itself
  adr::QuadratureControl qc = tight();
  Complex oracle = adr::response_2d_bruteforce(2, 1, w, dw, gref, eps, qc);
  CHECK(std::abs(limit.value - oracle) / std::abs(oracle) < 1e-5);

  CHECK_THROWS_AS(adr::f21_sharp_equal_acc(dw, w, alpha, 0.0, eps), adr::DomainError);
}

TEST_CASE("f21 gaussian quadrature and limits") {
  double dw = 1.0;
  DetectorGeometry g(1.0, 1.3, 0.3);
  auto rp = adr::rapidity_phi(g);

  // small-zeta law within 5%
  double eps = 0.2;
  adr::GaussianWindow small(0.05, 0.25 * eps);
  auto r = adr::f21_gaussian_quad(dw, small, g, eps);
  Complex law = small.zeta * small.zeta / (8.0 * kPi * g.alpha1 * g.alpha1) *
                std::exp(Complex(0.0, -dw * rp.a_minus * small.center_tau / g.alpha1)) /
                (std::cosh(rp.phi) - std::cos(8.0 * eps / rp.a_plus));
  CHECK(std::abs(r.value - law) / std::abs(law) < 0.05);

  // f12 = conj f21 via the 2-D oracle
  double eps2 = 0.03;
  adr::GaussianWindow w(0.0, 0.8);
  auto f21 = adr::f21_gaussian_quad(dw, w, g, eps2);
  Complex oracle = adr::response_2d_bruteforce(2, 1, w, dw, g, eps2, tight());
  CHECK(std::abs(f21.value - oracle) / std::abs(oracle) < 1e-6);
  Complex oracle12 = adr::response_2d_bruteforce(1, 2, w, dw, g, eps2, tight());
  CHECK(std::abs(oracle12 - std::conj(oracle)) < 1e-7 * std::abs(oracle));
}

TEST_CASE("f21 gaussian asymptotic") {
  // the derivative-correction series converges for zeta well above the
  // thermal time a1; zeta = 100 eps = 10 a1 here
  double dw = 1.0, eps = 0.1;
  DetectorGeometry g(1.0, 1.3, 0.3);
  adr::GaussianWindow w(0.0, 100.0 * eps);
  auto asym = adr::f21_gaussian_asymptotic(dw, w, g, eps, 1);
  auto quad = adr::f21_gaussian_quad(dw, w, g, eps);
  CHECK(std::abs(asym.value - quad.value) / std::abs(quad.value) < 0.02);

  // thermal factor at temperature 1/(pi a+): Planck-ratio test at scaled dw
  DetectorGeometry geq(1.0, 1.0, 0.3);
  auto rpe = adr::rapidity_phi(geq);
  auto lead = [&](double u) {
    return adr::f21_gaussian_asymptotic(u, adr::GaussianWindow(0.0, 2.0), geq, 1e-4, 0)
        .value.real();
  };
  double u1 = 1.3, u2 = 2.6;
  double expect = (std::sin(rpe.a_plus * u2 * rpe.phi / 2.0) / std::sin(rpe.a_plus * u1 * rpe.phi / 2.0)) *
                  adr::planck_factor(rpe.a_plus * u2 / 2.0) / adr::planck_factor(rpe.a_plus * u1 / 2.0);
  CHECK(lead(u2) / lead(u1) == doctest::Approx(expect).epsilon(1e-3));

  // theta-branch continuity across dw = 0
  auto bp = adr::f21_gaussian_asymptotic(1e-6, w, g, eps, 0).value;
  auto bm = adr::f21_gaussian_asymptotic(-1e-6, w, g, eps, 0).value;
  CHECK(std::abs(bp - bm) < 1e-4 * std::max(std::abs(bp), 1e-30));

  CHECK_THROWS_AS(adr::f21_gaussian_asymptotic(dw, adr::GaussianWindow(0.0, 5.0 * eps), g, eps),
                  adr::DomainError);
}

TEST_CASE("equal-acceleration asymptotic rate displays") {
  // long-time, small-cutoff limit of the crossed rate at alpha1 = alpha2:
  // sharp prefactor 1/(2 pi), gaussian prefactor 1/(4 pi)
  const double alpha = 1.0, phi = 0.4, eps = 1e-4;
  for (double dw : {1.0, -1.0}) {
    SharpWindow big = SharpWindow::centered(300.0);
    double h = 0.03;
    double rate = (adr::f21_sharp_equal_acc(dw, SharpWindow::centered(300.0 + h), alpha, phi, eps)
                       .value.real() -
                   adr::f21_sharp_equal_acc(dw, SharpWindow::centered(300.0 - h), alpha, phi, eps)
                       .value.real()) /
                  (2.0 * h);
    double expect = adr::r21_asymptotic_equal_acc(dw, alpha, phi, adr::SwitchFlavor::Sharp);
    CHECK(rate == doctest::Approx(expect).epsilon(5e-3));
    (void)big;
  }
  // gaussian: leading asymptotic term divided by dt = sqrt(2 pi) zeta
  double dx2 = 2.0 * alpha * alpha * (std::cosh(phi) - 1.0);
  DetectorGeometry geq(alpha, alpha, std::sqrt(dx2));
  for (double dw : {1.0, -1.0}) {
    adr::GaussianWindow w(0.0, 60.0);
    double rate = adr::f21_gaussian_asymptotic(dw, w, geq, eps, 0).value.real() / w.dt();
    double expect = adr::r21_asymptotic_equal_acc(dw, alpha, phi, adr::SwitchFlavor::Gaussian);
    CHECK(rate == doctest::Approx(expect).epsilon(2e-3));
  }
}

TEST_CASE("r21 sharp rate vs finite differences") {
  double eps = 0.03, dw = 1.0;
  DetectorGeometry g(1.0, 1.4, 0.3);
  SharpWindow w = SharpWindow::centered(3.0);
  double h = 1e-4 * 3.0;
  Complex fd = (adr::f21_sharp(dw, SharpWindow::centered(3.0 + h), g, eps).value -
                adr::f21_sharp(dw, SharpWindow::centered(3.0 - h), g, eps).value) /
               (2.0 * h);
  Complex an = adr::r21_sharp_rate(dw, w, g, eps);
  CHECK(std::abs(an - fd) / std::abs(fd) < 1e-5);
}

TEST_CASE("randomized oracle equivalence") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> alpha(0.3, 2.5), ratio(1.05, 2.0);
  std::uniform_real_distribution<double> dts(0.5, 8.0), dxs(0.1, 0.8), tc(-0.5, 0.5);
  std::uniform_real_distribution<double> epss(0.02, 0.08);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < 10; ++i) {
    double a1 = alpha(rng);
    DetectorGeometry g(a1, a1 * ratio(rng), dxs(rng));
    double eps = epss(rng);
    double dt = std::max(dts(rng), 10.0 * eps);
    double dw = sign(rng) ? 1.0 : -1.0;
    SharpWindow w = SharpWindow::centered(dt, tc(rng));
    INFO("a=(", g.alpha1, ",", g.alpha2, ") dx=", g.dx_perp, " dt=", dt, " eps=", eps,
         " dw=", dw, " T=", w.t_center());
    Complex closed = adr::f21_sharp(dw, w, g, eps).value;
    Complex oracle = adr::response_2d_bruteforce(2, 1, w, dw, g, eps, tight());
    CHECK(std::abs(closed - oracle) / std::abs(oracle) < 1e-5);
  }
}

TEST_CASE("total response positivity") {
  double eps = 0.03;
  SharpWindow w = SharpWindow::centered(3.0);
  for (double a2 : {1.0, 1.4, 2.2}) {
    DetectorGeometry g(1.0, a2, 0.3);
    double f11 = adr::f11_sharp(1.0, w, eps, 1.0).value.real();
    double f22 = adr::f22_sharp(1.0, w, eps, g).value.real();
    double f21re = adr::f21_sharp(1.0, w, g, eps).value.real();
    CHECK(f11 + f22 + 2.0 * f21re >= -1e-9);
  }
}

TEST_CASE("cross closed-form parts bookkeeping") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  auto rp = adr::rapidity_phi(g);
  auto parts = adr::cross_closed_form_parts(1.0, SharpWindow::centered(3.0), g, 0.03);
  Complex chi_expect(4.0 * 0.03 / (kPi * rp.a_plus), rp.phi / (2.0 * kPi));
  CHECK(std::abs(parts.lerch_arg - chi_expect) < 1e-15);
  // magnitude sanity: assembled pieces bound the combination
  CHECK(std::abs(parts.script_a) <= std::abs(parts.kappa1) + std::abs(parts.kappa2) +
                                        std::abs(parts.lambda_delta) + 10.0);
  // equal accelerations: the antisymmetric Lerch difference vanishes
  DetectorGeometry geq(1.1, 1.1, 0.4);
  auto peq = adr::cross_closed_form_parts(1.0, SharpWindow::centered(3.0), geq, 0.03);
  CHECK(std::abs(peq.lambda_delta) < 1e-13);
}
