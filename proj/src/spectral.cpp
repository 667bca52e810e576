#include "topomirror/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace topomirror {

double StateWeights::mirror() const {
    return std::accumulate(cells.begin(), cells.end(), 0.0);
}

double StateWeights::boundary_ratio() const {
    const double m = mirror();
    if (m <= 0.0) return 0.0;
    double b = 0.0;
    for (std::size_t k = 0; k < cells.size() && k < 3; ++k) b += cells[k];
    return b / m;
}

std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::PolaritonPlus: return "Polariton+";
        case StateClass::PolaritonMinus: return "Polariton-";
        case StateClass::Edge: return "Edge";
        case StateClass::Bulk: return "Bulk";
        case StateClass::CavityLike: return "CavityLike";
    }
    return "?";
}

std::optional<int> EigenSolution::index_of(StateClass c) const {
    for (std::size_t n = 0; n < classes.size(); ++n)
        if (classes[n] == c) return static_cast<int>(n);
    return std::nullopt;
}

namespace {

StateWeights component_weights(const Eigen::VectorXcd& v, bool mirror_only, int n_atoms) {
    StateWeights w;
    const int off = mirror_only ? 0 : 3;
    if (!mirror_only) {
        w.qe = std::norm(v(0));
        w.ccw = std::norm(v(1));
        w.cw = std::norm(v(2));
    }
    const int n_cells = (n_atoms + 1) / 2;
    w.cells.assign(n_cells, 0.0);
    for (int j = 0; j < n_atoms; ++j) w.cells[j / 2] += std::norm(v(off + j));
    return w;
}

}  // namespace

EigenSolution eigendecompose(const EffectiveHamiltonian& h) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h.matrix, true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("complex eigensolver failed to converge");

    const int dim = h.dim();
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    const auto& ev = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ev(a).imag() != ev(b).imag()) return ev(a).imag() > ev(b).imag();
        return ev(a).real() < ev(b).real();
    });

    EigenSolution sol;
    sol.mirror_only = h.mirror_only;
    sol.n_atoms = h.n_atoms();
    sol.eigenvalues.resize(dim);
    sol.right_vectors.resize(dim, dim);
    for (int n = 0; n < dim; ++n) {
        sol.eigenvalues(n) = ev(order[n]);
        Eigen::VectorXcd v = solver.eigenvectors().col(order[n]);
        sol.right_vectors.col(n) = v / v.norm();
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sol.right_vectors);
    const double smin = svd.singularValues()(dim - 1);
    sol.condition_number = smin > 0.0 ? svd.singularValues()(0) / smin
                                      : std::numeric_limits<double>::infinity();

    const double hnorm = h.matrix.norm();
    for (int n = 0; n < dim; ++n) {
        const double res =
            (h.matrix * sol.right_vectors.col(n) - sol.eigenvalues(n) * sol.right_vectors.col(n))
                .norm();
        sol.max_residual = std::max(sol.max_residual, hnorm > 0.0 ? res / hnorm : res);
    }

    sol.weights.reserve(dim);
    for (int n = 0; n < dim; ++n)
        sol.weights.push_back(component_weights(sol.right_vectors.col(n), h.mirror_only, h.n_atoms()));
    return sol;
}

void classify(EigenSolution& sol, const SystemParams&) {
    const int dim = static_cast<int>(sol.eigenvalues.size());
    sol.classes.assign(dim, StateClass::Bulk);
    sol.classification_ambiguous = false;
    if (dim == 0) return;

    if (!sol.mirror_only) {
        // polaritons: largest cavity weight among states with Re E > 0 (+)
        // and Re E < 0 (-); flag if the runner-up is within 10%
        for (int sign : {+1, -1}) {
            int best = -1, second = -1;
            for (int n = 0; n < dim; ++n) {
                if (sign * sol.eigenvalues(n).real() <= 0.0) continue;
                if (best < 0 || sol.weights[n].cavity() > sol.weights[best].cavity()) {
                    second = best;
                    best = n;
                } else if (second < 0 || sol.weights[n].cavity() > sol.weights[second].cavity()) {
                    second = n;
                }
            }
            if (best < 0) continue;
            sol.classes[best] = sign > 0 ? StateClass::PolaritonPlus : StateClass::PolaritonMinus;
            if (second >= 0 &&
                sol.weights[second].cavity() > 0.9 * sol.weights[best].cavity())
                sol.classification_ambiguous = true;
        }
        for (int n = 0; n < dim; ++n) {
            if (sol.classes[n] != StateClass::Bulk) continue;
            if (sol.weights[n].cavity() > 0.5) sol.classes[n] = StateClass::CavityLike;
        }
    }

    // edge: smallest |Re E| among states dominated by the mirror and
    // concentrated at the boundary
    int edge = -1;
    for (int n = 0; n < dim; ++n) {
        if (sol.classes[n] != StateClass::Bulk) continue;
        if (sol.weights[n].mirror() <= 0.5) continue;
        if (sol.weights[n].boundary_ratio() <= 0.5) continue;
        if (edge < 0 ||
            std::abs(sol.eigenvalues(n).real()) < std::abs(sol.eigenvalues(edge).real()))
            edge = n;
    }
    if (edge >= 0) sol.classes[edge] = StateClass::Edge;
}

std::vector<EdgeScanPoint> edge_decay_scan(const SystemParams& base,
                                           const std::vector<double>& j0_grid) {
    if (base.n_atoms < 1 || base.n_atoms % 2 == 0)
        throw std::invalid_argument("edge scan requires an odd atom number");
    std::vector<EdgeScanPoint> out;
    out.reserve(j0_grid.size());
    for (double j0 : j0_grid) {
        SystemParams p = base;
        p.J0 = j0;
        p.gamma0 = 0.0;
        auto h = build_mirror_heff(p, clean_realization(p));
        auto sol = eigendecompose(h);
        classify(sol, p);

        EdgeScanPoint pt;
        pt.j0 = j0;
        int idx = -1;
        if (auto e = sol.index_of(StateClass::Edge)) {
            idx = *e;
            pt.classified = true;
        } else {
            // fall back to the chiral-symmetry zero mode at min |Re E|
            for (int n = 0; n < h.dim(); ++n)
                if (idx < 0 || std::abs(sol.eigenvalues(n).real()) <
                                   std::abs(sol.eigenvalues(idx).real()))
                    idx = n;
        }
        pt.edge_decay = sol.decay_rate(idx);
        pt.edge_re = sol.eigenvalues(idx).real();
        out.push_back(pt);
    }
    return out;
}

std::vector<BandSweepPoint> band_sweep_vs_spacing(const SystemParams& base,
                                                  const std::vector<double>& varphi_grid) {
    std::vector<BandSweepPoint> out;
    out.reserve(varphi_grid.size());
    for (double varphi : varphi_grid) {
        SystemParams p = base;
        p.varphi = varphi;
        auto h = build_mirror_heff(p, clean_realization(p));
        auto sol = eigendecompose(h);
        BandSweepPoint pt;
        pt.varphi = varphi;
        pt.re_energies.resize(h.dim());
        for (int n = 0; n < h.dim(); ++n) pt.re_energies[n] = sol.eigenvalues(n).real();
        std::sort(pt.re_energies.begin(), pt.re_energies.end());
        out.push_back(pt);
    }
    return out;
}

}  // namespace topomirror
