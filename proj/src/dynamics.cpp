#include "topomirror/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "topomirror/util.hpp"

namespace topomirror {

namespace {
const std::complex<double> I(0.0, 1.0);

void fill_populations(const EffectiveHamiltonian& h, TimeSeries& ts) {
    const auto nt = ts.times.size();
    ts.total_population.resize(nt);
    if (!h.mirror_only) ts.qe_population.resize(nt);
    for (std::size_t k = 0; k < nt; ++k) {
        ts.total_population[k] = ts.amplitudes.col(k).squaredNorm();
        if (!h.mirror_only) ts.qe_population[k] = std::norm(ts.amplitudes(0, k));
    }
}

void propagate_eigenbasis(const EffectiveHamiltonian& h, const EigenSolution& sol,
                          const Eigen::VectorXcd& initial, TimeSeries& ts) {
    const Eigen::VectorXcd coeffs =
        sol.right_vectors.fullPivLu().solve(initial);
    for (std::size_t k = 0; k < ts.times.size(); ++k) {
        Eigen::VectorXcd phases(h.dim());
        for (int n = 0; n < h.dim(); ++n)
            phases(n) = coeffs(n) * std::exp(-I * sol.eigenvalues(n) * ts.times[k]);
        ts.amplitudes.col(k) = sol.right_vectors * phases;
    }
}

// Dormand-Prince 5(4) with dense evaluation at the requested sample times.
void propagate_rk45(const EffectiveHamiltonian& h, const Eigen::VectorXcd& initial,
                    TimeSeries& ts) {
    static const double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double e[7] = {71.0 / 57600, 0.0,           -71.0 / 16695, 71.0 / 1920,
                                -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

    auto rhs = [&](const Eigen::VectorXcd& s) -> Eigen::VectorXcd {
        return -I * (h.matrix * s);
    };

    const double rtol = 1e-10, atol = 1e-12;
    const double t_end = ts.times.back();
    double t = ts.times.front();
    Eigen::VectorXcd s = initial;
    ts.amplitudes.col(0) = s;
    std::size_t next = 1;

    double dt = (t_end - t) / 1000.0;
    if (dt <= 0.0) dt = 1e-6;
    Eigen::VectorXcd k[7];
    k[0] = rhs(s);
    while (t < t_end && next < ts.times.size()) {
        dt = std::min(dt, t_end - t);
        for (int i = 1; i < 7; ++i) {
            Eigen::VectorXcd acc = s;
            for (int j = 0; j < i; ++j) acc += dt * a[i][j] * k[j];
            k[i] = rhs(acc);
        }
        Eigen::VectorXcd s5 = s;
        for (int j = 0; j < 6; ++j) s5 += dt * a[6][j] * k[j];
        Eigen::VectorXcd err = Eigen::VectorXcd::Zero(s.size());
        for (int j = 0; j < 7; ++j) err += dt * e[j] * k[j];

        double scale = atol + rtol * std::max(s.norm(), s5.norm());
        double errnorm = err.norm() / scale;
        if (errnorm <= 1.0) {
            // FSAL: k[6] is the derivative at the accepted endpoint
            double t_new = t + dt;
            // cubic Hermite output on the passed sample times
            while (next < ts.times.size() && ts.times[next] <= t_new + 1e-14 * t_end) {
                double th = (ts.times[next] - t) / dt;
                double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
                double h10 = th * (1 - th) * (1 - th);
                double h01 = th * th * (3 - 2 * th);
                double h11 = th * th * (th - 1);
                ts.amplitudes.col(next) =
                    h00 * s + (h10 * dt) * k[0] + h01 * s5 + (h11 * dt) * k[6];
                ++next;
            }
            t = t_new;
            s = s5;
            k[0] = k[6];
        }
        double factor = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
        dt *= std::clamp(factor, 0.2, 5.0);
        if (dt < 1e-14 * std::max(1.0, t_end))
            throw std::runtime_error("rk45 step size underflow");
    }
    for (; next < ts.times.size(); ++next) ts.amplitudes.col(next) = s;
}

}  // namespace

TimeSeries propagate(const EffectiveHamiltonian& h, const Eigen::VectorXcd& initial,
                     const std::vector<double>& times, PropagationMethod method) {
    if (times.empty()) throw std::invalid_argument("empty time grid");
    if (initial.size() != h.dim())
        throw std::invalid_argument("initial state dimension mismatch");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (times[k] <= times[k - 1])
            throw std::invalid_argument("time grid must be strictly increasing");

    TimeSeries ts;
    ts.times = times;
    ts.amplitudes.resize(h.dim(), static_cast<Eigen::Index>(times.size()));

    bool use_rk = method == PropagationMethod::RungeKutta;
    if (method != PropagationMethod::RungeKutta) {
        auto sol = eigendecompose(h);
        if (method == PropagationMethod::Auto && sol.condition_number > 1e8) {
            use_rk = true;
        } else {
            propagate_eigenbasis(h, sol, initial, ts);
            ts.method_used = PropagationMethod::Eigenbasis;
        }
    }
    if (use_rk) {
        if (times.front() != 0.0)
            throw std::invalid_argument("rk45 propagation requires the grid to start at 0");
        propagate_rk45(h, initial, ts);
        ts.method_used = PropagationMethod::RungeKutta;
    }
    fill_populations(h, ts);
    return ts;
}

std::vector<int> local_maxima(const std::vector<double>& y) {
    std::vector<int> idx;
    const int n = static_cast<int>(y.size());
    if (n >= 2 && y[0] > y[1]) idx.push_back(0);
    for (int i = 1; i + 1 < n; ++i)
        if (y[i] > y[i - 1] && y[i] >= y[i + 1]) idx.push_back(i);
    return idx;
}

namespace {

// 1/e crossing of the log-linear interpolation through t = 0 and the local
// maxima of the population trace. Returns a negative value if the envelope
// stays above 1/e.
double envelope_crossing(const std::vector<double>& t, const std::vector<double>& pop) {
    const double target = std::exp(-1.0);
    std::vector<int> peaks = local_maxima(pop);
    if (peaks.empty() || peaks.front() != 0) peaks.insert(peaks.begin(), 0);
    for (std::size_t m = 1; m < peaks.size(); ++m) {
        double p0 = pop[peaks[m - 1]], p1 = pop[peaks[m]];
        if (p1 > target || p1 <= 0.0) continue;
        if (p0 <= target) return t[peaks[m - 1]];
        double l0 = std::log(p0), l1 = std::log(p1);
        double frac = (std::log(target) - l0) / (l1 - l0);
        return t[peaks[m - 1]] + frac * (t[peaks[m]] - t[peaks[m - 1]]);
    }
    // tail after the last envelope point
    int last = peaks.back();
    if (pop[last] > target) {
        for (int i = last + 1; i < static_cast<int>(pop.size()); ++i) {
            if (pop[i] <= target && pop[i] > 0.0) {
                double l0 = std::log(pop[i - 1]), l1 = std::log(pop[i]);
                double frac = (std::log(target) - l0) / (l1 - l0);
                return t[i - 1] + frac * (t[i] - t[i - 1]);
            }
        }
        return -1.0;
    }
    return t[last];
}

}  // namespace

LifetimeResult qe_lifetime(const EffectiveHamiltonian& h, const std::vector<double>& times) {
    if (h.mirror_only)
        throw std::invalid_argument("emitter lifetime needs the full system");
    Eigen::VectorXcd s0 = Eigen::VectorXcd::Zero(h.dim());
    s0(0) = 1.0;

    LifetimeResult res;
    std::vector<double> grid = times;
    for (int ext = 0; ext <= 3; ++ext) {
        res.series = propagate(h, s0, grid);
        res.extensions = ext;
        double tau = envelope_crossing(grid, res.series.qe_population);
        if (tau >= 0.0) {
            res.lifetime = tau;
            res.converged = true;
            break;
        }
        res.lifetime = grid.back();  // censored lower bound
        if (ext == 3) break;
        const int n = static_cast<int>(grid.size());
        grid = linspace(grid.front(), grid.front() + 4.0 * (grid.back() - grid.front()), n);
    }
    res.final_population = res.series.qe_population.back();
    return res;
}

std::vector<double> default_lifetime_grid(const SystemParams& p) {
    const double horizon = p.gamma0 > 0.0 ? 1.5 / p.gamma0 : 100.0 / p.Gamma;
    return linspace(0.0, horizon, 4001);
}

LifetimeResult bare_polariton_lifetime(const SystemParams& p, const std::vector<double>& times) {
    SystemParams bare = p;
    bare.n_atoms = 0;
    bare.detunings.clear();
    auto h = build_full_heff(bare, clean_realization(bare));
    return qe_lifetime(h, times);
}

LifetimeResult topological_lifetime(const SystemParams& p, const MirrorRealization& r,
                                    const std::vector<double>& times) {
    return qe_lifetime(build_full_heff(p, r), times);
}

namespace {

template <typename T, typename Make>
std::vector<LifetimeSweepPoint> lifetime_sweep(const SystemParams& base,
                                               const std::vector<T>& grid, int jobs,
                                               const Make& make) {
    std::vector<LifetimeSweepPoint> out(grid.size());
    const double tau0 =
        bare_polariton_lifetime(base, default_lifetime_grid(base)).lifetime;
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        SystemParams p = make(grid[i]);
        auto res = topological_lifetime(p, clean_realization(p), default_lifetime_grid(p));
        out[i].x = static_cast<double>(grid[i]);
        out[i].lifetime = res.lifetime;
        out[i].ratio = tau0 > 0.0 ? res.lifetime / tau0 : 0.0;
        out[i].converged = res.converged;
    });
    return out;
}

}  // namespace

std::vector<LifetimeSweepPoint> lifetime_vs_varphi(const SystemParams& base,
                                                   const std::vector<double>& varphi_grid,
                                                   int jobs) {
    return lifetime_sweep(base, varphi_grid, jobs, [&](double v) {
        SystemParams p = base;
        p.varphi = v;
        return p;
    });
}

std::vector<LifetimeSweepPoint> lifetime_vs_j0(const SystemParams& base,
                                               const std::vector<double>& j0_grid, int jobs) {
    return lifetime_sweep(base, j0_grid, jobs, [&](double j0) {
        SystemParams p = base;
        p.J0 = j0;
        return p;
    });
}

std::vector<LifetimeSweepPoint> lifetime_vs_n_atoms(const SystemParams& base,
                                                    const std::vector<int>& n_grid, int jobs) {
    return lifetime_sweep(base, n_grid, jobs, [&](int n) {
        SystemParams p = base;
        p.n_atoms = n;
        p.detunings.clear();
        return p;
    });
}

}  // namespace topomirror
