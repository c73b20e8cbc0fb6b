#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "adr/kinematics.hpp"
#include "doctest.h"

using adr::DetectorGeometry;

TEST_CASE("rapidity examples") {
  // identical hyperbolae
  auto r0 = adr::rapidity_phi(DetectorGeometry(1.3, 1.3, 0.0));
  CHECK(r0.phi == 0.0);
  CHECK(DetectorGeometry(1.3, 1.3, 0.0).coincident_world_lines());

  // alpha1 = 2, alpha2 = 1: cosh phi = 1.25, phi = ln 2
  auto r1 = adr::rapidity_phi(DetectorGeometry(2.0, 1.0, 0.0));
  CHECK(std::cosh(r1.phi) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(r1.phi == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  // equal alphas with separation: cosh phi = 3
  auto r2 = adr::rapidity_phi(DetectorGeometry(1.0, 1.0, 2.0));
  CHECK(std::cosh(r2.phi) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r2.phi == doctest::Approx(std::acosh(3.0)).epsilon(1e-14));
  CHECK(r2.a_plus == 2.0);
  CHECK(r2.a_minus == 0.0);
}

TEST_CASE("rapidity properties") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> a(0.05, 8.0), dx(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    double a1 = a(rng), a2 = a(rng), d = dx(rng);
    auto f = adr::rapidity_phi(DetectorGeometry(a1, a2, d));
    auto s = adr::rapidity_phi(DetectorGeometry(a2, a1, d));
    CHECK(f.phi == doctest::Approx(s.phi).epsilon(1e-13));      // swap symmetry
    CHECK(std::cosh(f.phi) >= 1.0);
    CHECK(f.a_plus > std::abs(f.a_minus));
    // reconstruct cosh phi from the geometry to 1e-14
    double target = 1.0 + ((a1 - a2) * (a1 - a2) + d * d) / (2.0 * a1 * a2);
    CHECK(std::cosh(f.phi) == doctest::Approx(target).epsilon(1e-14));
    // monotone in separation
    auto g = adr::rapidity_phi(DetectorGeometry(a1, a2, d + 0.5));
    CHECK(g.phi > f.phi);
  }
}

TEST_CASE("proper time map") {
  DetectorGeometry g(1.0, 3.0, 0.4);
  CHECK(adr::proper_time_map(0.0, g) == 0.0);
  CHECK(adr::proper_time_map(2.0, g) == doctest::Approx(6.0).epsilon(1e-15));
  // round trip through the swapped geometry
  DetectorGeometry gs(3.0, 1.0, 0.4);
  double t = 1.7;
  CHECK(adr::proper_time_map(adr::proper_time_map(t, g), gs) == doctest::Approx(t).epsilon(1e-15));
  // linear and order-preserving
  CHECK(adr::proper_time_map(1.0, g) < adr::proper_time_map(2.0, g));
  CHECK(adr::proper_time_map(-5.0, g) == doctest::Approx(-15.0));
}

TEST_CASE("worldline") {
  auto [t0, z0] = adr::worldline(0.0, 0.7);
  CHECK(t0 == 0.0);
  CHECK(z0 == doctest::Approx(0.7));
  auto [t, z] = adr::worldline(1.7, 0.4);
  CHECK(z * z - t * t == doctest::Approx(0.16).epsilon(1e-12));
  // dt/dtau at tau = 0 equals 1, by central difference
  double h = 1e-6;
  auto [tp, zp] = adr::worldline(h, 0.4);
  auto [tm, zm] = adr::worldline(-h, 0.4);
  CHECK((tp - tm) / (2.0 * h) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(adr::worldline(0.0, -1.0), adr::DomainError);
}
