#pragma once

#include "adr/kinematics.hpp"
#include "adr/quadrature.hpp"
#include "adr/response_crossed.hpp"
#include "adr/switching.hpp"
#include "adr/types.hpp"

namespace adr {

// Brute-force double quadrature of the defining response integral
//   F_ij = int dtau1 int dtau1' e^{-i dw (tau_i(tau1) - tau_j(tau1'))}
//          chi_i chi_j G_ij(tau1 - tau1') (dtau_j/dtau1')(dtau_i/dtau1),
// independent of every closed-form path. i, j in {1, 2}.
Complex response_2d_bruteforce(int i, int j, const SwitchingProfile& sw, double dw,
                               const DetectorGeometry& g, double eps,
                               const QuadratureControl& qc);

// Triangle-reduced 1-D oracle for F11 with a sharp window:
//   int_{-dt}^{dt} (dt - |psi|) e^{-i dw psi} G11(psi) dpsi.
Complex response_1d_reduced_f11(double dw, const SharpWindow& sw, double eps, double alpha1,
                                const QuadratureControl& qc);

// Direct quadrature of the half-line transform of the bare crossed kernel,
// truncated at psi = tail_cut * alpha1 past the oscillation-resolved region.
Complex halfline_bruteforce(double dw, double sigma, const DetectorGeometry& g, double eps,
                            EpsSign es, const QuadratureControl& qc);

}  // namespace adr
