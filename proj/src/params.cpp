#include "topomirror/params.hpp"

#include <cmath>
#include <stdexcept>

#include "topomirror/util.hpp"

namespace topomirror {

void SystemParams::validate() const {
    if (g < 0 || kappa < 0 || gamma0 < 0 || Gamma < 0 || J0 < 0)
        throw std::invalid_argument("rates g, kappa, gamma0, Gamma, J0 must be non-negative");
    if (n_atoms < 0)
        throw std::invalid_argument("n_atoms must be non-negative");
    if (!detunings.empty() && static_cast<int>(detunings.size()) != n_atoms)
        throw std::invalid_argument("detunings list length must equal n_atoms");
    if (gamma0 == 0.0 && Gamma == 0.0 && kappa == 0.0)
        throw std::invalid_argument("at least one dissipative rate must be positive to fix the unit");
}

std::vector<double> SystemParams::resolved_detunings() const {
    if (!detunings.empty()) return detunings;
    return std::vector<double>(n_atoms, 0.0);
}

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SystemParams preset(std::string_view name) {
    SystemParams p;
    p.gamma0 = 1.0;
    p.Gamma = 5.0;
    p.kappa = 20.0;
    p.n_atoms = 31;
    p.phi_dim = 0.3 * kPi;
    p.varphi = 1.5 * kPi;
    p.phi1 = 0.0;
    if (name == "fig2" || name == "fig3-strong") {
        p.g = 20.0;
        p.J0 = 8.0 * p.Gamma;
    } else if (name == "fig3-weak") {
        p.g = 5.0;
        p.J0 = 5.0 * p.Gamma;
    } else {
        throw std::invalid_argument("unknown preset: " + std::string(name));
    }
    return p;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig2", "fig3-weak", "fig3-strong"};
    return names;
}

void DisorderSpec::validate() const {
    if (position_frac < 0 || coupling_frac < 0 || frequency_halfwidth < 0)
        throw std::invalid_argument("disorder fractions must be non-negative");
    if (position_frac >= 0.5)
        throw std::invalid_argument("position_frac >= 0.5 would allow atoms to reorder");
    if (n_realizations < 1)
        throw std::invalid_argument("n_realizations must be positive");
}

std::vector<double> staggered_couplings(double J0, double phi_dim, int n_atoms) {
    if (n_atoms < 1)
        throw std::invalid_argument("staggered_couplings requires n_atoms >= 1");
    const double j_minus = J0 * (1.0 - std::cos(phi_dim));
    const double j_plus = J0 * (1.0 + std::cos(phi_dim));
    std::vector<double> bonds(n_atoms - 1);
    for (int j = 1; j < n_atoms; ++j)
        bonds[j - 1] = (j % 2 == 1) ? j_minus : j_plus;
    return bonds;
}

MirrorRealization clean_realization(const SystemParams& p) {
    MirrorRealization r;
    r.phases.resize(p.n_atoms);
    for (int j = 0; j < p.n_atoms; ++j)
        r.phases[j] = p.phi1 + j * p.varphi;
    r.bonds = p.n_atoms >= 1 ? staggered_couplings(p.J0, p.phi_dim, p.n_atoms)
                             : std::vector<double>{};
    r.detunings = p.resolved_detunings();
    return r;
}

MirrorRealization sample_realization(const SystemParams& p, const DisorderSpec& spec, int index) {
    spec.validate();
    if (index < 0 || index >= spec.n_realizations)
        throw std::invalid_argument("realization index out of range");
    MirrorRealization r = clean_realization(p);
    auto rng = SplitMix64::substream(spec.seed, static_cast<std::uint64_t>(index));
    // Fixed draw order (positions, bonds, detunings) keeps streams aligned
    // across disorder kinds; zero amplitudes leave the clean values intact.
    for (int j = 0; j < p.n_atoms; ++j)
        r.phases[j] += p.varphi * spec.position_frac * rng.next_symmetric();
    for (int j = 0; j + 1 < p.n_atoms; ++j)
        r.bonds[j] += p.J0 * spec.coupling_frac * rng.next_symmetric();
    for (int j = 0; j < p.n_atoms; ++j)
        r.detunings[j] += spec.frequency_halfwidth * rng.next_symmetric();
    return r;
}

}  // namespace topomirror
