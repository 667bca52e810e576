#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "topomirror/hamiltonian.hpp"

namespace topomirror {

enum class ChannelClass { CavityLike, EvenPolarized, OddPolarized, Background };

std::string to_string(ChannelClass c);

struct DissipationChannel {
    double rate = 0.0;          // eigenvalue of gamma = i(H - H^dag)
    Eigen::VectorXcd mode;      // unit-norm eigenvector
    ChannelClass label = ChannelClass::Background;
    double cavity_weight = 0.0;
    double even_weight = 0.0;   // |mode|^2 on even-numbered atoms
    double odd_weight = 0.0;
};

struct DissipationSpectrum {
    std::vector<DissipationChannel> channels;  // sorted by descending rate
    double trace = 0.0;           // sum of rates = gamma0 (N+1) + 2 kappa + 2 N Gamma
    double completeness = 0.0;    // ||gamma - sum_k rate_k mode_k mode_k^dag|| / ||gamma||
    int numerical_rank = 0;       // rates above 1e-10 * trace
};

// Diagonalizes the dissipation matrix. For gamma0 = 0 only two collective
// channels (the right- and left-moving waveguide fields) carry weight, so
// the rank is at most 2.
DissipationSpectrum dissipation_spectrum(const EffectiveHamiltonian& h);

// Channel labels: CavityLike when the two ring modes carry > 0.5;
// Even/OddPolarized when one sublattice holds > 60% of the mirror weight.
void classify_channels(DissipationSpectrum& spec, const EffectiveHamiltonian& h);

struct PolaritonRates {
    double rate_plus = 0.0;   // <psi_+| gamma |psi_+>
    double rate_minus = 0.0;
    double energy_plus = 0.0;  // eigenvalues of the Hermitian part
    double energy_minus = 0.0;
};

// Emission rates of the upper/lower polaritons: eigenstates of the
// Hermitian part (H + H^dag)/2 with maximal cavity weight on each side of
// zero energy, evaluated in the dissipation quadratic form.
PolaritonRates polariton_channel_rates(const EffectiveHamiltonian& h);

}  // namespace topomirror
