#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace adr {

using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;

// Thrown when an argument lies outside a function's mathematical domain
// (branch cuts, poles, divergent series).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an adaptive scheme exhausts its budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

enum class Method { ClosedForm, Quadrature, Asymptotic };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Quadrature: return "quadrature";
    case Method::Asymptotic: return "asymptotic";
  }
  return "?";
}

struct ResponseResult {
  Complex value{};
  Method method = Method::ClosedForm;
  double err_estimate = 0.0;
  bool advisory_domain = false;   // set when dt < 10*eps for sharp windows
  bool slow_convergence = false;  // set when a series hit its term cap
};

inline double heaviside(double x) { return x > 0 ? 1.0 : (x < 0 ? 0.0 : 0.5); }

// 1/(e^{2 pi w} - 1), w > 0.
inline double planck_factor(double w) { return 1.0 / std::expm1(2.0 * kPi * w); }

}  // namespace adr
