#pragma once

#include <Eigen/Dense>
#include <vector>

#include "topomirror/hamiltonian.hpp"
#include "topomirror/spectral.hpp"

namespace topomirror {

enum class PropagationMethod { Auto, Eigenbasis, RungeKutta };

struct TimeSeries {
    std::vector<double> times;
    Eigen::MatrixXcd amplitudes;            // dim x n_times, s(t_k) per column
    std::vector<double> qe_population;      // |s_QE|^2 (empty for mirror-only)
    std::vector<double> total_population;   // ||s||^2
    PropagationMethod method_used = PropagationMethod::Eigenbasis;
};

// Evolves d s/dt = -i H s from s(0) over the given times. Auto uses the
// eigenbasis V exp(-iEt) V^{-1} and falls back to adaptive RK45
// (Dormand-Prince) when cond(V) > 1e8.
TimeSeries propagate(const EffectiveHamiltonian& h, const Eigen::VectorXcd& initial,
                     const std::vector<double>& times,
                     PropagationMethod method = PropagationMethod::Auto);

struct LifetimeResult {
    double lifetime = 0.0;       // envelope 1/e crossing time
    bool converged = false;      // a crossing was found within the (extended) grid
    int extensions = 0;          // number of x4 grid extensions used
    double final_population = 0.0;
    TimeSeries series;           // trace on the final grid
};

// Emitter lifetime from the decay envelope of |s_QE(t)|^2 for the emitter
// initially excited. The envelope interpolates log-population piecewise
// linearly through t = 0 and the successive local maxima, so Rabi
// oscillations do not produce early crossings. When the envelope never
// reaches 1/e the grid is extended by x4 (up to three times).
LifetimeResult qe_lifetime(const EffectiveHamiltonian& h, const std::vector<double>& times);

// Lifetime of the bare cavity-QED system (N = 0), approximately
// 2/(kappa + gamma0) in the strong-coupling regime.
LifetimeResult bare_polariton_lifetime(const SystemParams& p, const std::vector<double>& times);

// Lifetime with the full mirror attached; same grid conventions.
LifetimeResult topological_lifetime(const SystemParams& p, const MirrorRealization& r,
                                    const std::vector<double>& times);

// Default lifetime grid: 4001 points over [0, 1.5/gamma0], or [0, 100/Gamma]
// for a dissipationless emitter.
std::vector<double> default_lifetime_grid(const SystemParams& p);

struct LifetimeSweepPoint {
    double x = 0.0;          // swept parameter value
    double lifetime = 0.0;
    double ratio = 0.0;      // lifetime / tau0 of the matching bare system
    bool converged = false;
};

std::vector<LifetimeSweepPoint> lifetime_vs_varphi(const SystemParams& base,
                                                   const std::vector<double>& varphi_grid,
                                                   int jobs = 1);
std::vector<LifetimeSweepPoint> lifetime_vs_j0(const SystemParams& base,
                                               const std::vector<double>& j0_grid,
                                               int jobs = 1);
std::vector<LifetimeSweepPoint> lifetime_vs_n_atoms(const SystemParams& base,
                                                    const std::vector<int>& n_grid,
                                                    int jobs = 1);

// Indices of strict local maxima of y, including the t = 0 boundary point
// when it dominates its right neighbor.
std::vector<int> local_maxima(const std::vector<double>& y);

}  // namespace topomirror
