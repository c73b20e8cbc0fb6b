#include "adr/specfun.hpp"

#include <cmath>
#include <vector>

namespace adr {
namespace {

using std::abs;
using std::arg;
using std::exp;
using std::log;

bool on_nonpositive_real_axis(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0;
}

// E1 Maclaurin: -gamma - Log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!).
Complex e1_series(Complex z) {
  Complex term(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (int k = 1; k < 200; ++k) {
    term *= -z / static_cast<double>(k);
    Complex add = -term / static_cast<double>(k);
    sum += add;
    if (abs(add) < 1e-18 * (1.0 + abs(sum))) break;
  }
  return -kEulerGamma - log(z) + sum;
}

// Asymptotic E1(z) ~ e^{-z}/z (1 - 1/z + 2/z^2 - ...), |z| large.
Complex e1_asymptotic(Complex z) {
  Complex w = 1.0 / z;
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  double prev = 1e300;
  for (int k = 1; k < 80; ++k) {
    term *= -static_cast<double>(k) * w;
    double mag = abs(term);
    if (mag > prev) break;  // divergent tail reached
    sum += term;
    prev = mag;
    if (mag < 1e-18) break;
  }
  return exp(-z) * w * sum;
}

// Modified Lentz continued fraction
// E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))), contracted form.
Complex e1_continued_fraction(Complex z) {
  const double tiny = 1e-290;
  Complex b = z + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 20000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    Complex del = c * d;
    h *= del;
    if (abs(del - 1.0) < 1e-16) return exp(-z) * h;
  }
  throw ConvergenceError("E1: continued fraction stalled");
}

// Si/Ci Maclaurin for moderate |z|.
Complex si_series(Complex z) {
  Complex z2 = z * z;
  Complex term = z;
  Complex sum = z;
  for (int k = 1; k < 80; ++k) {
    term *= -z2 / static_cast<double>(2 * k * (2 * k + 1));
    Complex add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (abs(add) < 1e-18 * (1.0 + abs(sum))) break;
  }
  return sum;
}

// Cin(z) = gamma + Log z - Ci(z), entire: sum_{k>=1} (-1)^{k+1} z^{2k}/(2k (2k)!).
Complex cin_series(Complex z) {
  Complex z2 = z * z;
  Complex term(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (int k = 1; k < 80; ++k) {
    term *= -z2 / static_cast<double>((2 * k - 1) * (2 * k));
    Complex add = -term / static_cast<double>(2 * k);
    sum += add;
    if (abs(add) < 1e-18 * (1.0 + abs(sum))) break;
  }
  return sum;
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

namespace detail {

Complex shi_series(Complex w) {
  Complex w2 = w * w;
  Complex term = w;
  Complex sum = w;
  for (int k = 1; k < 400; ++k) {
    term *= w2 / static_cast<double>(2 * k * (2 * k + 1));
    Complex add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (abs(add) < 1e-18 * abs(sum)) break;
  }
  return sum;
}

Complex chin_series(Complex w) {
  Complex w2 = w * w;
  Complex term(1.0, 0.0);
  Complex sum(0.0, 0.0);
  for (int k = 1; k < 400; ++k) {
    term *= w2 / static_cast<double>((2 * k - 1) * (2 * k));
    Complex add = term / static_cast<double>(2 * k);
    sum += add;
    if (abs(add) < 1e-18 * (1.0 + abs(sum))) break;
  }
  return sum;
}

}  // namespace detail

Complex exp_integral_e1(Complex z) {
  if (z == Complex(0.0, 0.0)) throw DomainError("E1: z = 0");
  if (on_nonpositive_real_axis(z)) throw DomainError("E1: z on the branch cut (-inf, 0]");
  if (std::abs(z.real()) >= 700.0) throw DomainError("E1: |Re z| >= 700 overflow guard");
  double r = abs(z);
  if (r >= 36.0) return e1_asymptotic(z);
  // series cancellation loses ~0.434 (|z| + Re z) digits; cheap where that is small
  if (r <= 3.0 || 0.434 * (r + z.real()) <= 4.0) return e1_series(z);
  return e1_continued_fraction(z);
}

Complex sine_integral(Complex z) {
  if (std::abs(z.imag()) >= 700.0) throw DomainError("Si: |Im z| >= 700 overflow guard");
  if (z.real() < 0.0) return -sine_integral(-z);
  double r = abs(z);
  if (r <= 8.0) return si_series(z);
  // Near the imaginary axis go through Shi (cancellation-free there).
  if (std::abs(z.real()) < 0.2 * std::abs(z.imag())) {
    return kI * detail::shi_series(-kI * z);
  }
  Complex e1p = exp_integral_e1(kI * z);
  Complex e1m = exp_integral_e1(-kI * z);
  return kPi / 2.0 + (e1p - e1m) / (2.0 * kI);
}

Complex cosine_integral(Complex z) {
  if (on_nonpositive_real_axis(z)) throw DomainError("Ci: z on the branch cut (-inf, 0]");
  if (std::abs(z.imag()) >= 700.0) throw DomainError("Ci: |Im z| >= 700 overflow guard");
  if (z.real() < 0.0) {
    // Ci(z) = Ci(-z) + Log(z) - Log(-z)  (= +- i pi by the sign of Im z)
    Complex shift = (z.imag() >= 0.0) ? Complex(0.0, kPi) : Complex(0.0, -kPi);
    return cosine_integral(-z) + shift;
  }
  double r = abs(z);
  if (r <= 8.0) return kEulerGamma + log(z) - cin_series(z);
  if (std::abs(z.real()) < 0.2 * std::abs(z.imag())) {
    // Chi route: Ci(z) = Chi(-iz) + Log z - Log(-iz)
    Complex w = -kI * z;
    Complex chi = kEulerGamma + log(w) + detail::chin_series(w);
    return chi + log(z) - log(w);
  }
  Complex e1p = exp_integral_e1(kI * z);
  Complex e1m = exp_integral_e1(-kI * z);
  return -(e1p + e1m) / 2.0;
}

double exp_integral_ei(double x) {
  if (x == 0.0) throw DomainError("Ei: x = 0");
  if (x < 0.0) {
    // Real principal value: Ei(x) = -E1(-x).
    return -exp_integral_e1(Complex(-x, 0.0)).real();
  }
  if (x <= 40.0) {
    // All-positive series, no cancellation.
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 400; ++k) {
      term *= x / k;
      double add = term / k;
      sum += add;
      if (add < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  if (x >= 700.0) throw DomainError("Ei: x >= 700 overflow guard");
  double w = 1.0 / x, term = 1.0, sum = 1.0, prev = 1e300;
  for (int k = 1; k < 80; ++k) {
    term *= k * w;
    if (term > prev) break;
    sum += term;
    prev = term;
    if (term < 1e-18) break;
  }
  return std::exp(x) * w * sum;
}

Complex exp_integral_ei(Complex z) {
  if (z == Complex(0.0, 0.0)) throw DomainError("Ei: z = 0");
  if (z.imag() == 0.0) return Complex(exp_integral_ei(z.real()), 0.0);
  double s = z.imag() > 0.0 ? 1.0 : -1.0;
  return -exp_integral_e1(-z) + Complex(0.0, s * kPi);
}

Complex lerch_phi_sderiv(double z, Complex a, bool* slow_convergence) {
  if (slow_convergence) *slow_convergence = false;
  if (z < 0.0 || z >= 1.0) throw DomainError("lerch_phi_sderiv: need 0 <= z < 1");
  Complex sum(0.0, 0.0);
  double zn = 1.0;
  constexpr long kCap = 1000000;
  for (long n = 0; n < kCap; ++n) {
    Complex na = static_cast<double>(n) + a;
    if (on_nonpositive_real_axis(na)) {
      throw DomainError("lerch_phi_sderiv: n + a on the non-positive real axis");
    }
    Complex term = zn * log(na);
    sum -= term;
    // remaining terms bounded by z^{n+1} (|log(n+1+a)| + 1/(1-z)-growth margin)
    double tail = zn * z * (abs(log(na + 1.0)) + 2.0) / (1.0 - z);
    if (n > 3 && tail < 1e-15 * (1.0 + abs(sum))) return sum;
    zn *= z;
    if (zn == 0.0) return sum;
  }
  if (slow_convergence) *slow_convergence = true;
  return sum;
}

}  // namespace adr
