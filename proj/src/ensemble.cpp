#include "topomirror/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "topomirror/dynamics.hpp"
#include "topomirror/util.hpp"

namespace topomirror {

namespace {

// Two-pass statistics; identical samples give std = 0 and mean = min = max
// exactly, so a zero-disorder sweep has no numerical spread.
void basic_stats(const std::vector<double>& xs, double& mean, double& sd, double* mn,
                 double* mx) {
    if (xs.empty()) return;
    double lo = xs[0], hi = xs[0], sum = 0.0;
    for (double x : xs) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        sum += x;
    }
    if (lo == hi) {
        mean = lo;
        sd = 0.0;
    } else {
        mean = sum / static_cast<double>(xs.size());
        double acc = 0.0;
        for (double x : xs) acc += (x - mean) * (x - mean);
        sd = std::sqrt(acc / static_cast<double>(xs.size()));
    }
    if (mn) *mn = lo;
    if (mx) *mx = hi;
}

void fill_stats(EnsemblePoint& pt) {
    std::vector<double> converged;
    for (std::size_t i = 0; i < pt.ratios.size(); ++i)
        if (pt.converged[i]) converged.push_back(pt.ratios[i]);
    basic_stats(converged, pt.mean, pt.std_dev, &pt.min, &pt.max);
    basic_stats(pt.ratios, pt.mean_censored, pt.std_dev_censored, nullptr, nullptr);
}

}  // namespace

EnsembleResult disorder_sweep(const SystemParams& base, const DisorderSpec& spec,
                              SweepAxis axis, const std::vector<double>& axis_grid,
                              int jobs, bool allow_combined) {
    spec.validate();
    const int kinds = (spec.position_frac > 0.0) + (spec.coupling_frac > 0.0) +
                      (spec.frequency_halfwidth > 0.0);
    if (kinds != 1 && !allow_combined && !spec.is_clean())
        throw std::invalid_argument(
            "enable exactly one disorder kind, or pass the combined-disorder flag");
    if (axis_grid.empty()) throw std::invalid_argument("empty axis grid");

    EnsembleResult out;
    out.seed = spec.seed;
    out.n_realizations = spec.n_realizations;
    out.tau0 = bare_polariton_lifetime(base, default_lifetime_grid(base)).lifetime;

    const std::size_t n_pts = axis_grid.size();
    const std::size_t n_real = static_cast<std::size_t>(spec.n_realizations);
    out.points.resize(n_pts);
    for (std::size_t p = 0; p < n_pts; ++p) {
        out.points[p].axis_value = axis_grid[p];
        out.points[p].ratios.assign(n_real, 0.0);
        out.points[p].converged.assign(n_real, false);
    }

    parallel_for(n_pts * n_real, jobs, [&](std::size_t task) {
        const std::size_t p = task / n_real;
        const int i = static_cast<int>(task % n_real);
        SystemParams params = base;
        if (axis == SweepAxis::J0)
            params.J0 = axis_grid[p];
        else
            params.varphi = axis_grid[p];
        auto real = sample_realization(params, spec, i);
        auto res = topological_lifetime(params, real, default_lifetime_grid(params));
        out.points[p].ratios[i] = out.tau0 > 0.0 ? res.lifetime / out.tau0 : 0.0;
        out.points[p].converged[i] = res.converged;
    });

    for (auto& pt : out.points) {
        pt.n_converged = static_cast<int>(std::count(pt.converged.begin(), pt.converged.end(), true));
        pt.n_censored = static_cast<int>(pt.ratios.size()) - pt.n_converged;
        fill_stats(pt);
    }
    return out;
}

}  // namespace topomirror
