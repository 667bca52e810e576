#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "topomirror/hamiltonian.hpp"

namespace topomirror {

enum class StateClass { PolaritonPlus, PolaritonMinus, Edge, Bulk, CavityLike };

std::string to_string(StateClass c);

// Per-eigenstate probability weights aggregated over components. Cells pair
// the atoms (2k-1, 2k); odd N leaves a final singleton cell.
struct StateWeights {
    double qe = 0.0, ccw = 0.0, cw = 0.0;
    std::vector<double> cells;
    double mirror() const;
    double cavity() const { return qe + ccw + cw; }
    // weight in the first three cells relative to the mirror weight
    double boundary_ratio() const;
};

struct EigenSolution {
    Eigen::VectorXcd eigenvalues;    // sorted by ascending decay rate -2 Im E
    Eigen::MatrixXcd right_vectors;  // unit-norm columns, H V = V diag(E)
    double condition_number = 0.0;   // of V; > 1e8 flags a near-defective matrix
    double max_residual = 0.0;       // max_n ||H v_n - E_n v_n|| / ||H||
    bool mirror_only = false;
    int n_atoms = 0;
    std::vector<StateWeights> weights;
    std::vector<StateClass> classes;
    bool classification_ambiguous = false;

    std::optional<int> index_of(StateClass c) const;
    double decay_rate(int n) const { return -2.0 * eigenvalues(n).imag(); }
};

// Dense complex eigendecomposition with decay-rate ordering. Throws
// std::runtime_error on solver failure; a large condition number is
// reported, not fatal.
EigenSolution eigendecompose(const EffectiveHamiltonian& h);

// Assigns {Polariton+-, Edge, Bulk, CavityLike}. Polaritons are the states
// of maximal cavity weight on each side of zero detuning; the edge state is
// the minimal-|Re E| mirror state localized at the boundary (weight of the
// first three cells above half the mirror weight).
void classify(EigenSolution& sol, const SystemParams& params);

struct EdgeScanPoint {
    double j0 = 0.0;
    double edge_decay = 0.0;  // -2 Im E of the edge state
    double edge_re = 0.0;
    bool classified = false;  // classifier found an Edge state; otherwise the
                              // minimal-|Re E| mirror state was used
};

// Decay rate of the mirror edge state versus interaction strength, for the
// bare mirror with gamma0 = 0 and odd N (single edge state).
std::vector<EdgeScanPoint> edge_decay_scan(const SystemParams& base,
                                           const std::vector<double>& j0_grid);

struct BandSweepPoint {
    double varphi = 0.0;
    std::vector<double> re_energies;  // sorted ascending, one per mirror state
};

// Mirror-only real energy bands versus atom spacing (through varphi = k0*d).
std::vector<BandSweepPoint> band_sweep_vs_spacing(const SystemParams& base,
                                                  const std::vector<double>& varphi_grid);

}  // namespace topomirror
