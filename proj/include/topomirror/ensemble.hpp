#pragma once

#include <vector>

#include "topomirror/params.hpp"

namespace topomirror {

enum class SweepAxis { J0, Spacing };

struct EnsemblePoint {
    double axis_value = 0.0;
    // statistics of tau_TO/tau_0 over converged realizations
    double mean = 0.0, std_dev = 0.0, min = 0.0, max = 0.0;
    // the same statistics with censored (non-converged, lower-bound) ratios
    // folded in at their final-grid values
    double mean_censored = 0.0, std_dev_censored = 0.0;
    int n_converged = 0;
    int n_censored = 0;
    std::vector<double> ratios;  // per realization, index order; NaN-free
    std::vector<bool> converged;
};

struct EnsembleResult {
    std::vector<EnsemblePoint> points;
    std::uint64_t seed = 0;
    int n_realizations = 0;
    double tau0 = 0.0;  // clean N = 0 lifetime used for every ratio
};

// Disorder-averaged lifetime-enhancement curve. The spec must enable
// exactly one disorder kind unless allow_combined is set; the realization
// grid (n_points x n_realizations) forms one flat work queue and results
// are reduced in index order, so output is independent of scheduling.
EnsembleResult disorder_sweep(const SystemParams& base, const DisorderSpec& spec,
                              SweepAxis axis, const std::vector<double>& axis_grid,
                              int jobs = 1, bool allow_combined = false);

}  // namespace topomirror
