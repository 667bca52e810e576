#pragma once

#include <Eigen/Dense>
#include <vector>

#include "topomirror/hamiltonian.hpp"

namespace topomirror {

// Steady-state amplitudes for a unit monochromatic drive at detuning delta,
// s = -i (delta*1 - H)^{-1} u_R. Throws std::runtime_error when the resolvent
// is singular at this detuning.
Eigen::VectorXcd steady_state(const EffectiveHamiltonian& h, double delta);

struct ScatterPoint {
    double delta = 0.0;
    std::complex<double> r_amp;  // reflected amplitude  <u_L, s>
    std::complex<double> t_amp;  // transmitted amplitude a_in + <u_R, s>
    double reflectance = 0.0;    // |r|^2
    double transmittance = 0.0;  // |t|^2
    double loss = 0.0;           // 1 - R - T, free-space leakage
};

ScatterPoint reflection_transmission(const EffectiveHamiltonian& h, double delta);

std::vector<ScatterPoint> scatter_sweep(const EffectiveHamiltonian& h,
                                        const std::vector<double>& deltas, int jobs = 1);

// Emission spectrum of the initially excited emitter,
// S(omega) = Re{ i [(omega*1 - H)^{-1}]_{QE,QE} }; integrates to pi.
double emission_spectrum(const EffectiveHamiltonian& h, double omega);

std::vector<double> emission_sweep(const EffectiveHamiltonian& h,
                                   const std::vector<double>& omegas, int jobs = 1);

// Same spectrum through the eigendecomposition,
// S = Re{ i sum_n [V]_{0n} [V^{-1}]_{n0} / (omega - E_n) }; cross-checks the
// direct solve.
double emission_spectrum_eigen(const EffectiveHamiltonian& h, double omega);

// integral of S over (-inf, inf) by adaptive Simpson on omega = tan(x),
// which maps the Lorentzian tails onto a finite interval
double emission_sum(const EffectiveHamiltonian& h, double tol = 1e-9);

}  // namespace topomirror
