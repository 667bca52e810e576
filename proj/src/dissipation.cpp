#include "topomirror/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace topomirror {

std::string to_string(ChannelClass c) {
    switch (c) {
        case ChannelClass::CavityLike: return "CavityLike";
        case ChannelClass::EvenPolarized: return "EvenPolarized";
        case ChannelClass::OddPolarized: return "OddPolarized";
        case ChannelClass::Background: return "Background";
    }
    return "?";
}

DissipationSpectrum dissipation_spectrum(const EffectiveHamiltonian& h) {
    const Eigen::MatrixXcd gamma = dissipation_matrix(h.matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gamma);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dissipation eigensolver failed");

    const int dim = h.dim();
    DissipationSpectrum spec;
    spec.channels.resize(dim);
    for (int n = 0; n < dim; ++n) {
        auto& ch = spec.channels[n];
        ch.rate = solver.eigenvalues()(dim - 1 - n);  // descending
        ch.mode = solver.eigenvectors().col(dim - 1 - n);
    }
    spec.trace = solver.eigenvalues().sum();

    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& ch : spec.channels)
        rebuilt += ch.rate * ch.mode * ch.mode.adjoint();
    const double gnorm = gamma.norm();
    spec.completeness = gnorm > 0.0 ? (gamma - rebuilt).norm() / gnorm : 0.0;

    for (const auto& ch : spec.channels)
        if (ch.rate > 1e-10 * std::max(spec.trace, 1.0)) ++spec.numerical_rank;

    classify_channels(spec, h);
    return spec;
}

void classify_channels(DissipationSpectrum& spec, const EffectiveHamiltonian& h) {
    const int off = h.atom_offset();
    for (auto& ch : spec.channels) {
        ch.cavity_weight = 0.0;
        if (!h.mirror_only)
            ch.cavity_weight = std::norm(ch.mode(0)) + std::norm(ch.mode(1)) + std::norm(ch.mode(2));
        ch.even_weight = ch.odd_weight = 0.0;
        for (int j = 0; j < h.n_atoms(); ++j) {
            // atoms are 1-indexed physically: j = 0 is atom 1, odd sublattice
            double w = std::norm(ch.mode(off + j));
            (j % 2 == 0 ? ch.odd_weight : ch.even_weight) += w;
        }
        const double mirror = ch.even_weight + ch.odd_weight;
        if (ch.cavity_weight > 0.5)
            ch.label = ChannelClass::CavityLike;
        else if (mirror > 0.0 && ch.even_weight > 0.6 * mirror)
            ch.label = ChannelClass::EvenPolarized;
        else if (mirror > 0.0 && ch.odd_weight > 0.6 * mirror)
            ch.label = ChannelClass::OddPolarized;
        else
            ch.label = ChannelClass::Background;
    }
}

PolaritonRates polariton_channel_rates(const EffectiveHamiltonian& h) {
    if (h.mirror_only)
        throw std::invalid_argument("polariton rates need the full system");
    const Eigen::MatrixXcd herm = 0.5 * (h.matrix + h.matrix.adjoint());
    const Eigen::MatrixXcd gamma = dissipation_matrix(h.matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian-part eigensolver failed");

    PolaritonRates out;
    const int dim = h.dim();
    int best_plus = -1, best_minus = -1;
    auto cavity = [&](int n) {
        const auto v = solver.eigenvectors().col(n);
        return std::norm(v(0)) + std::norm(v(1)) + std::norm(v(2));
    };
    for (int n = 0; n < dim; ++n) {
        const double e = solver.eigenvalues()(n);
        if (e > 0.0 && (best_plus < 0 || cavity(n) > cavity(best_plus))) best_plus = n;
        if (e < 0.0 && (best_minus < 0 || cavity(n) > cavity(best_minus))) best_minus = n;
    }
    if (best_plus < 0 || best_minus < 0)
        throw std::runtime_error("no polariton branch on one side of zero energy");

    const auto vp = solver.eigenvectors().col(best_plus);
    const auto vm = solver.eigenvectors().col(best_minus);
    out.energy_plus = solver.eigenvalues()(best_plus);
    out.energy_minus = solver.eigenvalues()(best_minus);
    out.rate_plus = std::real(vp.dot(gamma * vp));
    out.rate_minus = std::real(vm.dot(gamma * vm));
    return out;
}

}  // namespace topomirror
