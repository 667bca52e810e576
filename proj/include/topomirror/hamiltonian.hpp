#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "topomirror/params.hpp"

namespace topomirror {

// Non-Hermitian generator of the single-excitation amplitude dynamics,
// d s/dt = -i H s, in the basis [QE, CCW, CW, atom_1..atom_N] (full) or
// [atom_1..atom_N] (mirror-only).
struct EffectiveHamiltonian {
    Eigen::MatrixXcd matrix;
    bool mirror_only = false;
    SystemParams params;
    MirrorRealization realization;

    int dim() const { return static_cast<int>(matrix.rows()); }
    int n_atoms() const { return params.n_atoms; }
    int atom_offset() const { return mirror_only ? 0 : 3; }
    std::vector<std::string> basis_labels() const;
};

// Full (N+3)x(N+3) Hamiltonian: Hermitian cavity-QED and SSH blocks plus
// the anti-Hermitian decay terms, the chiral cavity-atom couplings
// (CCW drives atoms, atoms drive CW) and the waveguide-mediated long-range
// atom-atom terms -i*Gamma*exp(i|phi_j - phi_l|).
EffectiveHamiltonian build_full_heff(const SystemParams& p, const MirrorRealization& r);

// NxN atom block only (requires N >= 1); equals the trailing sub-block of
// the full Hamiltonian for identical inputs.
EffectiveHamiltonian build_mirror_heff(const SystemParams& p, const MirrorRealization& r);

// gamma := i(H - H^dag). Hermitian, positive semidefinite, and equal to
// gamma0*D + u_R u_R^dag + u_L u_L^dag with D the projector onto
// {QE, atoms} and u_R/u_L the collective right/left waveguide channels.
Eigen::MatrixXcd dissipation_matrix(const Eigen::MatrixXcd& h);

// u_R = [0, sqrt(kappa), 0, sqrt(Gamma) e^{i phi_j} ...]; also the drive
// vector for a unit-amplitude left-incident planewave, and the channel
// whose overlap gives the transmitted field.
Eigen::VectorXcd channel_vector_right(const EffectiveHamiltonian& h);

// u_L = [0, 0, sqrt(kappa), sqrt(Gamma) e^{-i phi_j} ...]; the channel
// whose overlap gives the reflected field.
Eigen::VectorXcd channel_vector_left(const EffectiveHamiltonian& h);

// Debug/golden-test dump: one "row,col,re,im" line per entry.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m);

}  // namespace topomirror
