#pragma once

#include "adr/kinematics.hpp"
#include "adr/switching.hpp"
#include "adr/types.hpp"

namespace adr {

enum class Direction { Excitation, Decay };  // dw = +omega0 / -omega0
enum class ResponseComponent { F11, F22, F21 };
enum class SwitchFlavor { Sharp, Gaussian };

struct TransitionSpec {
  double omega0 = 1.0;
  Direction direction = Direction::Excitation;
  double mu = 1.0;
  double matrix_element = 0.70710678118654752440;  // 1/sqrt(2), both atoms

  TransitionSpec() = default;
  TransitionSpec(double w0, Direction d, double coupling = 1.0)
      : omega0(w0), direction(d), mu(coupling) {
    if (!(omega0 > 0.0)) throw DomainError("transition: omega0 must be > 0");
    if (!(mu > 0.0)) throw DomainError("transition: mu must be > 0");
  }
  double dw() const { return direction == Direction::Excitation ? omega0 : -omega0; }
};

struct RateBundle {
  double r11 = 0.0;
  double r22 = 0.0;
  double re_r12 = 0.0;
  double total = 0.0;  // (mu^2/2)(r11 + r22 + 2 re_r12)
};

// Central difference of the selected response over dt (sharp) or over
// sqrt(2 pi) zeta (Gaussian). Throws on step underflow.
double rate_numeric(ResponseComponent component, double dw, const SwitchingProfile& sw,
                    const DetectorGeometry& g, double eps);

// dt -> inf, eps -> 0 rate of the individual response:
//   |dw|/2pi { Theta(-dw)[1 + n] + Theta(dw) n },  n = 1/(e^{2 pi a1 |dw|} - 1).
double r11_asymptotic(double dw, double alpha1);

// Equal-acceleration crossed asymptotic rate; c = 2 (sharp) or 4 (gaussian):
//   sin(|dw| alpha phi) / (c pi alpha sinh phi) { Theta-Planck bracket }.
double r21_asymptotic_equal_acc(double dw, double alpha, double phi, SwitchFlavor flavor);

// Finite-time rates of all components and their weighted total.
RateBundle total_rate(const TransitionSpec& ts, const SwitchingProfile& sw,
                      const DetectorGeometry& g, double eps);

// f(x) = 2 (1 + sin x / x), f(0) = 4.
double interference_factor(double x);

// Thrown when the finite-time total "rate" is not positive: no mean-life
// interpretation exists there.
class NonPositiveRateError : public std::runtime_error {
 public:
  explicit NonPositiveRateError(double total)
      : std::runtime_error("mean_life: non-positive total rate " + std::to_string(total)),
        total_rate(total) {}
  double total_rate;
};

// Mean life of the decay transition: tau = 1 / total rate (requires Decay).
double mean_life(const TransitionSpec& ts, const SwitchingProfile& sw, const DetectorGeometry& g,
                 double eps);

// The dimensionless group mu^2 |dw| tau / 2 used by the survey plots.
double mean_life_dimensionless(const TransitionSpec& ts, const SwitchingProfile& sw,
                               const DetectorGeometry& g, double eps);

}  // namespace adr
