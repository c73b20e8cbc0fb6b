#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "adr/oracle.hpp"
#include "doctest.h"

using adr::Complex;
using adr::DetectorGeometry;
using adr::SharpWindow;

namespace {
adr::QuadratureControl tight() {
  adr::QuadratureControl qc;
  qc.rel_tol = 1e-11;
  qc.abs_tol = 1e-18;
  return qc;
}
}  // namespace

TEST_CASE("2-D and 1-D oracle agreement for F11") {
  double eps = 0.03;
  SharpWindow w = SharpWindow::centered(2.0);
  DetectorGeometry g(1.0, 1.7, 0.3);  // alpha2 irrelevant for (1,1)
  Complex two = adr::response_2d_bruteforce(1, 1, w, 1.0, g, eps, tight());
  Complex one = adr::response_1d_reduced_f11(1.0, w, eps, 1.0, tight());
  CHECK(std::abs(two - one) / std::abs(one) < 1e-8);
  CHECK(std::abs(one.imag()) < 1e-12);
}

TEST_CASE("hermiticity of the 2-D oracle") {
  double eps = 0.03;
  SharpWindow w = SharpWindow::centered(1.5);
  DetectorGeometry g(1.0, 1.4, 0.3);
  Complex f21 = adr::response_2d_bruteforce(2, 1, w, 1.0, g, eps, tight());
  Complex f12 = adr::response_2d_bruteforce(1, 2, w, 1.0, g, eps, tight());
  CHECK(std::abs(f12 - std::conj(f21)) < 1e-8 * std::abs(f21));
}

TEST_CASE("short-window scaling") {
  double eps = 0.05;
  DetectorGeometry g(1.0, 1.0, 0.2);
  Complex a = adr::response_2d_bruteforce(1, 1, SharpWindow::centered(0.02), 1.0, g, eps, tight());
  Complex b = adr::response_2d_bruteforce(1, 1, SharpWindow::centered(0.01), 1.0, g, eps, tight());
  CHECK(std::abs(a) / std::abs(b) == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("epsilon-monotonicity of the reduced oracle at dw = 0") {
  SharpWindow w = SharpWindow::centered(1.0);
  double prev = 1e300;
  for (double eps : {0.02, 0.05, 0.1}) {
    double v = adr::response_1d_reduced_f11(0.0, w, eps, 1.0, tight()).real();
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("half-line brute force tail-cut robustness") {
  DetectorGeometry g(1.0, 1.5, 0.3);
  adr::QuadratureControl qa = tight();
  adr::QuadratureControl qb = tight();
  qb.tail_cut *= 2.0;
  Complex a = adr::halfline_bruteforce(1.0, 1.0, g, 0.03, adr::EpsSign::Plus, qa);
  Complex b = adr::halfline_bruteforce(1.0, 1.0, g, 0.03, adr::EpsSign::Plus, qb);
  CHECK(std::abs(a - b) < 1e-10);
  // sigma-reflection conjugation with the eps sign flipped
  Complex p = adr::halfline_bruteforce(1.0, 1.0, g, 0.03, adr::EpsSign::Plus, qa);
  Complex m = adr::halfline_bruteforce(1.0, -1.0, g, 0.03, adr::EpsSign::Minus, qa);
  CHECK(std::abs(m - std::conj(p)) < 1e-9 * std::abs(p));
}

TEST_CASE("positive-definiteness witness") {
  // sharp-window double integral of the kernel has non-negative real part
  double eps = 0.04;
  DetectorGeometry g(0.8, 0.8, 0.0);
  for (double dw : {-1.0, 0.7, 2.0}) {
    Complex v = adr::response_2d_bruteforce(1, 1, SharpWindow::centered(1.7), dw, g, eps, tight());
    CHECK(v.real() >= -1e-10);
    CHECK(std::abs(v.imag()) < 1e-10);
  }
}
