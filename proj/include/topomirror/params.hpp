#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace topomirror {

// Physical parameters of one network instance: a two-mode ring cavity with
// an embedded emitter, coupled through a waveguide to a chain of N mirror
// atoms with dimerized nearest-neighbor bonds. All rates share one unit
// (gamma0 = 1 by default; with gamma0 = 0 use Gamma = 1). The rotating
// frame sets the cavity frequency to zero, so every frequency below is a
// detuning from it.
struct SystemParams {
    double g = 0.0;        // emitter-cavity coupling, identical for both modes
    double kappa = 0.0;    // decay of each cavity mode into the waveguide
    double gamma0 = 1.0;   // free-space decay of the emitter and of each atom
    double Gamma = 0.0;    // waveguide-induced decay per direction per atom
    double J0 = 0.0;       // dimerization interaction strength
    double phi_dim = 0.0;  // dimerization angle; bonds alternate J0*(1 -+ cos)
    int n_atoms = 0;       // N = 0 means bare cavity QED
    double varphi = 0.0;   // inter-atom propagation phase k0*d
    double phi1 = 0.0;     // phase from the waveguide-cavity junction to atom 1
    std::vector<double> detunings;  // per-atom; empty means all zero

    // Throws std::invalid_argument on negative rates, negative N, or a
    // detuning list whose length does not match n_atoms.
    void validate() const;

    std::vector<double> resolved_detunings() const;  // always size n_atoms
    double rate_unit() const { return gamma0 > 0.0 ? gamma0 : Gamma; }
};

// Bundled parameter sets: "fig2" (strong coupling), "fig3-weak",
// "fig3-strong" (alias of fig2).
SystemParams preset(std::string_view name);
const std::vector<std::string>& preset_names();

// Uniform i.i.d. perturbations of the mirror. Zero fractions reproduce the
// clean system exactly for any seed.
struct DisorderSpec {
    double position_frac = 0.0;        // displacement within +-frac of the spacing
    double coupling_frac = 0.0;        // bond shift within +-frac of J0
    double frequency_halfwidth = 0.0;  // detuning shift within +-halfwidth
    std::uint64_t seed = 0;
    int n_realizations = 100;

    void validate() const;  // rejects position_frac >= 0.5 (atoms could reorder)
    bool is_clean() const {
        return position_frac == 0.0 && coupling_frac == 0.0 && frequency_halfwidth == 0.0;
    }
};

// Per-atom geometry and couplings after disorder is applied.
struct MirrorRealization {
    std::vector<double> phases;     // phi_j, size N
    std::vector<double> bonds;      // J_j, size N-1
    std::vector<double> detunings;  // delta_j, size N
};

// Staggered bonds J_j = J0*(1 - cos phi) for odd j, J0*(1 + cos phi) for
// even j, j = 1..N-1. N = 1 returns an empty list.
std::vector<double> staggered_couplings(double J0, double phi_dim, int n_atoms);

MirrorRealization clean_realization(const SystemParams& p);

// Clean geometry plus uniform perturbations from the deterministic
// (seed, index) substream. Position disorder displaces each atom
// independently, perturbing its phase (and hence all long-range phase
// differences) but not the bond list.
MirrorRealization sample_realization(const SystemParams& p, const DisorderSpec& spec, int index);

}  // namespace topomirror
