#include "topomirror/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace topomirror {

using std::complex;
namespace {
const complex<double> I(0.0, 1.0);

void check_consistent(const SystemParams& p, const MirrorRealization& r) {
    const auto n = static_cast<std::size_t>(p.n_atoms);
    if (r.phases.size() != n || r.detunings.size() != n ||
        (n >= 1 && r.bonds.size() != n - 1) || (n == 0 && !r.bonds.empty()))
        throw std::invalid_argument("realization dimensions do not match n_atoms");
}

// Atom block shared by the full and mirror-only builders.
void fill_atom_block(Eigen::MatrixXcd& h, int off, const SystemParams& p,
                     const MirrorRealization& r) {
    const int n = p.n_atoms;
    for (int j = 0; j < n; ++j) {
        h(off + j, off + j) = r.detunings[j] - I * (p.Gamma + 0.5 * p.gamma0);
        for (int l = 0; l < n; ++l) {
            if (l == j) continue;
            h(off + j, off + l) += -I * p.Gamma * std::exp(I * std::abs(r.phases[j] - r.phases[l]));
        }
    }
    for (int j = 0; j + 1 < n; ++j) {
        h(off + j, off + j + 1) += r.bonds[j];
        h(off + j + 1, off + j) += r.bonds[j];
    }
}
}  // namespace

std::vector<std::string> EffectiveHamiltonian::basis_labels() const {
    std::vector<std::string> labels;
    if (!mirror_only) {
        labels.push_back("QE");
        labels.push_back("CCW");
        labels.push_back("CW");
    }
    for (int j = 1; j <= params.n_atoms; ++j)
        labels.push_back("Atom(" + std::to_string(j) + ")");
    return labels;
}

EffectiveHamiltonian build_full_heff(const SystemParams& p, const MirrorRealization& r) {
    p.validate();
    check_consistent(p, r);
    const int n = p.n_atoms;
    EffectiveHamiltonian h;
    h.mirror_only = false;
    h.params = p;
    h.realization = r;
    h.matrix = Eigen::MatrixXcd::Zero(n + 3, n + 3);
    auto& m = h.matrix;

    m(0, 0) = -I * 0.5 * p.gamma0;
    m(1, 1) = -I * 0.5 * p.kappa;
    m(2, 2) = -I * 0.5 * p.kappa;
    m(0, 1) = m(1, 0) = p.g;
    m(0, 2) = m(2, 0) = p.g;

    const double cascade = std::sqrt(p.kappa * p.Gamma);
    for (int j = 0; j < n; ++j) {
        // one-way: the CCW mode drives the atoms, the atoms drive the CW mode
        m(3 + j, 1) = -I * cascade * std::exp(I * r.phases[j]);
        m(2, 3 + j) = -I * cascade * std::exp(I * r.phases[j]);
    }
    fill_atom_block(m, 3, p, r);
    return h;
}

EffectiveHamiltonian build_mirror_heff(const SystemParams& p, const MirrorRealization& r) {
    p.validate();
    check_consistent(p, r);
    if (p.n_atoms < 1)
        throw std::invalid_argument("mirror Hamiltonian requires n_atoms >= 1");
    EffectiveHamiltonian h;
    h.mirror_only = true;
    h.params = p;
    h.realization = r;
    h.matrix = Eigen::MatrixXcd::Zero(p.n_atoms, p.n_atoms);
    fill_atom_block(h.matrix, 0, p, r);
    return h;
}

Eigen::MatrixXcd dissipation_matrix(const Eigen::MatrixXcd& h) {
    return I * (h - h.adjoint());
}

Eigen::VectorXcd channel_vector_right(const EffectiveHamiltonian& h) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(h.dim());
    const int off = h.atom_offset();
    if (!h.mirror_only) u(1) = std::sqrt(h.params.kappa);
    const double sg = std::sqrt(h.params.Gamma);
    for (int j = 0; j < h.n_atoms(); ++j)
        u(off + j) = sg * std::exp(I * h.realization.phases[j]);
    return u;
}

Eigen::VectorXcd channel_vector_left(const EffectiveHamiltonian& h) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(h.dim());
    const int off = h.atom_offset();
    if (!h.mirror_only) u(2) = std::sqrt(h.params.kappa);
    const double sg = std::sqrt(h.params.Gamma);
    for (int j = 0; j < h.n_atoms(); ++j)
        u(off + j) = sg * std::exp(-I * h.realization.phases[j]);
    return u;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m) {
    os << "row,col,re,im\n";
    char buf[96];
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%lld,%lld,%.17g,%.17g\n",
                          static_cast<long long>(r), static_cast<long long>(c),
                          m(r, c).real(), m(r, c).imag());
            os << buf;
        }
}

}  // namespace topomirror
