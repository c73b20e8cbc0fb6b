#pragma once

#include <functional>
#include <vector>

#include "adr/types.hpp"

namespace adr {

struct QuadratureControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  double tail_cut = 48.0;  // truncation of semi-infinite tails, in decay-scale units
};

struct QuadResult {
  Complex value{};
  double err = 0.0;
  long n_evals = 0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Largest-error-first refinement.
QuadResult integrate(const std::function<Complex(double)>& f, double a, double b,
                     const QuadratureControl& qc);

// Same, with the initial interval list given by consecutive breakpoints.
QuadResult integrate_panels(const std::function<Complex(double)>& f,
                            const std::vector<double>& breaks, const QuadratureControl& qc);

// Breakpoints for an oscillatory factor e^{-i omega psi} on [a, b]: panel edges
// at half-period spacing, capped in count, always including a and b.
std::vector<double> oscillation_breaks(double a, double b, double omega, int max_panels = 512);

// Merge extra scale points (peaks at |psi| ~ scale) into a break list.
std::vector<double> merge_breaks(std::vector<double> breaks, const std::vector<double>& extra);

}  // namespace adr
