// topomirror: simulation of a single excitation in a chiral cavity-QED
// network terminated by an SSH-dimerized atom mirror. Data-only output
// (CSV + JSON manifests); plotting is out of scope.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topomirror/config.hpp"
#include "topomirror/dissipation.hpp"
#include "topomirror/dynamics.hpp"
#include "topomirror/ensemble.hpp"
#include "topomirror/hamiltonian.hpp"
#include "topomirror/io.hpp"
#include "topomirror/response.hpp"
#include "topomirror/spectral.hpp"
#include "topomirror/util.hpp"

namespace tmr = topomirror;
namespace fs = std::filesystem;
using topomirror::SystemParams;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kExitOk = 0, kExitConfig = 1, kExitNumeric = 2, kExitPartial = 3;

struct GlobalOpts {
    std::string config_path;
    std::string preset_name;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_dir = ".";
    std::string grid;
};

tmr::RunConfig resolve_config(const GlobalOpts& g) {
    tmr::RunConfig cfg;
    if (!g.config_path.empty()) cfg = tmr::parse_config_file(g.config_path);
    if (!g.preset_name.empty()) {
        cfg.system = tmr::preset(g.preset_name);
        cfg.preset_name = g.preset_name;
    }
    if (cfg.preset_name.empty() && g.config_path.empty())
        cfg.system = tmr::preset("fig2");
    // flags override file keys one-for-one
    if (g.jobs > 0) cfg.jobs = g.jobs;
    if (g.seed_given) cfg.disorder.seed = g.seed;
    if (!g.out_dir.empty()) cfg.out_dir = g.out_dir;
    if (!g.grid.empty()) cfg.grid = g.grid;
    cfg.system.validate();
    cfg.disorder.validate();
    return cfg;
}

class RunContext {
public:
    RunContext(std::string command, const tmr::RunConfig& cfg)
        : command_(std::move(command)), cfg_(cfg), start_(std::chrono::steady_clock::now()) {
        fs::create_directories(cfg_.out_dir);
    }

    std::string path(const std::string& name) const {
        return (fs::path(cfg_.out_dir) / name).string();
    }

    void record(const std::string& p) { outputs_.push_back(p); }

    void finish() {
        std::vector<tmr::ManifestEntry> entries;
        for (const auto& p : outputs_) entries.push_back({p, tmr::file_hash(p)});
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const std::string mpath = path(command_ + "_manifest.json");
        tmr::write_manifest(mpath, command_, tmr::config_to_json(cfg_), cfg_.disorder.seed,
                           wall, entries);
        std::cout << "wrote " << mpath << " (" << outputs_.size() << " output files)\n";
    }

    const tmr::RunConfig& cfg() const { return cfg_; }

private:
    std::string command_;
    tmr::RunConfig cfg_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> outputs_;
};

std::vector<double> grid_or(const tmr::RunConfig& cfg, const std::string& axis, double lo,
                            double hi, int n) {
    if (!cfg.grid.empty()) {
        auto g = tmr::parse_grid(cfg.grid);
        if (g.axis == axis) return g.values();
    }
    return tmr::linspace(lo, hi, n);
}

// ---------------------------------------------------------------- commands

int cmd_eigen(const tmr::RunConfig& cfg, bool mirror_only) {
    RunContext ctx("eigen", cfg);
    const auto& p = cfg.system;
    auto real = tmr::clean_realization(p);
    auto h = mirror_only ? tmr::build_mirror_heff(p, real) : tmr::build_full_heff(p, real);
    auto sol = tmr::eigendecompose(h);
    tmr::classify(sol, p);

    tmr::CsvWriter csv(ctx.path("eigen.csv"),
                      {"index", "re_energy", "im_energy", "decay_rate", "class",
                       "qe_weight", "cavity_weight", "mirror_weight", "boundary_ratio"});
    for (int n = 0; n < h.dim(); ++n) {
        csv.field(n)
            .field(sol.eigenvalues(n).real())
            .field(sol.eigenvalues(n).imag())
            .field(sol.decay_rate(n))
            .field(tmr::to_string(sol.classes[n]))
            .field(sol.weights[n].qe)
            .field(sol.weights[n].cavity())
            .field(sol.weights[n].mirror())
            .field(sol.weights[n].boundary_ratio());
        csv.end_row();
    }
    ctx.record(ctx.path("eigen.csv"));
    std::cout << "dim " << h.dim() << ", condition(V) " << sol.condition_number << "\n";
    for (auto c : {tmr::StateClass::PolaritonPlus, tmr::StateClass::PolaritonMinus,
                   tmr::StateClass::Edge})
        if (auto i = sol.index_of(c))
            std::printf("%-11s E = %+.6g %+.6gi  (decay %.6g)\n", tmr::to_string(c).c_str(),
                        sol.eigenvalues(*i).real(), sol.eigenvalues(*i).imag(),
                        sol.decay_rate(*i));
    ctx.finish();
    return kExitOk;
}

int cmd_bands(const tmr::RunConfig& cfg) {
    RunContext ctx("bands", cfg);
    const auto varphis = grid_or(cfg, "varphi", 0.0, 2.0 * kPi, 201);
    auto bands = tmr::band_sweep_vs_spacing(cfg.system, varphis);
    tmr::CsvWriter csv(ctx.path("bands.csv"), {"varphi", "band_index", "re_energy"});
    for (const auto& pt : bands)
        for (std::size_t n = 0; n < pt.re_energies.size(); ++n) {
            csv.field(pt.varphi).field(static_cast<int>(n)).field(pt.re_energies[n]);
            csv.end_row();
        }
    ctx.record(ctx.path("bands.csv"));
    ctx.finish();
    return kExitOk;
}

int write_timeseries(RunContext& ctx, const std::string& name, const tmr::TimeSeries& ts) {
    tmr::CsvWriter csv(ctx.path(name), {"time", "qe_population", "total_population"});
    for (std::size_t k = 0; k < ts.times.size(); ++k) {
        csv.field(ts.times[k])
            .field(ts.qe_population.empty() ? 0.0 : ts.qe_population[k])
            .field(ts.total_population[k]);
        csv.end_row();
    }
    ctx.record(ctx.path(name));
    return kExitOk;
}

int cmd_dynamics(const tmr::RunConfig& cfg, double t_max, int n_times) {
    RunContext ctx("dynamics", cfg);
    const auto& p = cfg.system;
    auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
    Eigen::VectorXcd s0 = Eigen::VectorXcd::Zero(h.dim());
    s0(0) = 1.0;
    if (t_max <= 0.0) t_max = tmr::default_lifetime_grid(p).back();
    auto ts = tmr::propagate(h, s0, tmr::linspace(0.0, t_max, n_times));
    write_timeseries(ctx, "dynamics.csv", ts);
    ctx.finish();
    return kExitOk;
}

int cmd_lifetime(const tmr::RunConfig& cfg) {
    RunContext ctx("lifetime", cfg);
    const auto& p = cfg.system;
    auto grid = tmr::default_lifetime_grid(p);
    auto topo = tmr::topological_lifetime(p, tmr::clean_realization(p), grid);
    auto bare = tmr::bare_polariton_lifetime(p, grid);
    tmr::CsvWriter csv(ctx.path("lifetime.csv"),
                      {"tau_topo", "tau0", "ratio", "converged", "extensions"});
    csv.field(topo.lifetime)
        .field(bare.lifetime)
        .field(bare.lifetime > 0.0 ? topo.lifetime / bare.lifetime : 0.0)
        .field(topo.converged ? 1 : 0)
        .field(topo.extensions);
    csv.end_row();
    ctx.record(ctx.path("lifetime.csv"));
    write_timeseries(ctx, "lifetime_trace.csv", topo.series);
    std::printf("tau_TO = %.6g, tau0 = %.6g, ratio = %.4g%s\n", topo.lifetime, bare.lifetime,
                bare.lifetime > 0.0 ? topo.lifetime / bare.lifetime : 0.0,
                topo.converged ? "" : " (lower bound)");
    ctx.finish();
    return topo.converged ? kExitOk : kExitPartial;
}

int cmd_scatter(const tmr::RunConfig& cfg, bool mirror_only) {
    RunContext ctx("scatter", cfg);
    const auto& p = cfg.system;
    auto real = tmr::clean_realization(p);
    auto h = mirror_only ? tmr::build_mirror_heff(p, real) : tmr::build_full_heff(p, real);
    const double span = mirror_only ? 4.0 * p.Gamma : 2.5 * std::sqrt(2.0) * std::max(p.g, 1.0);
    const auto deltas = grid_or(cfg, "delta", -span, span, 2001);
    auto pts = tmr::scatter_sweep(h, deltas, cfg.jobs);
    tmr::CsvWriter csv(ctx.path("scatter.csv"),
                      {"delta", "r_re", "r_im", "t_re", "t_im", "R", "T", "loss"});
    for (const auto& pt : pts) {
        csv.field(pt.delta)
            .field(pt.r_amp)
            .field(pt.t_amp)
            .field(pt.reflectance)
            .field(pt.transmittance)
            .field(pt.loss);
        csv.end_row();
    }
    ctx.record(ctx.path("scatter.csv"));
    ctx.finish();
    return kExitOk;
}

int cmd_emission(const tmr::RunConfig& cfg) {
    RunContext ctx("emission", cfg);
    const auto& p = cfg.system;
    auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
    const double span = 2.5 * std::sqrt(2.0) * std::max(p.g, 20.0 * p.rate_unit());
    const auto omegas = grid_or(cfg, "omega", -span, span, 2001);
    auto s = tmr::emission_sweep(h, omegas, cfg.jobs);
    tmr::CsvWriter csv(ctx.path("emission.csv"), {"omega", "spectrum"});
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        csv.field(omegas[i]).field(s[i]);
        csv.end_row();
    }
    ctx.record(ctx.path("emission.csv"));
    std::printf("sum rule: integral = %.8g (pi = %.8g)\n", tmr::emission_sum(h), kPi);
    ctx.finish();
    return kExitOk;
}

int cmd_dissipation(const tmr::RunConfig& cfg) {
    RunContext ctx("dissipation", cfg);
    const auto& p = cfg.system;
    auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
    auto spec = tmr::dissipation_spectrum(h);
    tmr::CsvWriter csv(ctx.path("dissipation.csv"),
                      {"index", "rate", "label", "cavity_weight", "even_weight", "odd_weight"});
    for (std::size_t n = 0; n < spec.channels.size(); ++n) {
        const auto& ch = spec.channels[n];
        csv.field(static_cast<int>(n))
            .field(ch.rate)
            .field(tmr::to_string(ch.label))
            .field(ch.cavity_weight)
            .field(ch.even_weight)
            .field(ch.odd_weight);
        csv.end_row();
    }
    ctx.record(ctx.path("dissipation.csv"));
    auto rates = tmr::polariton_channel_rates(h);
    tmr::CsvWriter pcsv(ctx.path("polariton_rates.csv"),
                       {"energy_plus", "rate_plus", "energy_minus", "rate_minus"});
    pcsv.field(rates.energy_plus)
        .field(rates.rate_plus)
        .field(rates.energy_minus)
        .field(rates.rate_minus);
    pcsv.end_row();
    ctx.record(ctx.path("polariton_rates.csv"));
    std::printf("trace %.6g, rank %d, completeness residual %.3g\n", spec.trace,
                spec.numerical_rank, spec.completeness);
    ctx.finish();
    return kExitOk;
}

int write_ensemble(RunContext& ctx, const std::string& name, const tmr::EnsembleResult& res) {
    tmr::CsvWriter csv(ctx.path(name),
                      {"axis_value", "mean", "std", "min", "max", "censored_count",
                       "mean_censored", "std_censored", "n_converged"});
    for (const auto& pt : res.points) {
        csv.field(pt.axis_value)
            .field(pt.mean)
            .field(pt.std_dev)
            .field(pt.min)
            .field(pt.max)
            .field(pt.n_censored)
            .field(pt.mean_censored)
            .field(pt.std_dev_censored)
            .field(pt.n_converged);
        csv.end_row();
    }
    ctx.record(ctx.path(name));
    return kExitOk;
}

int cmd_disorder(const tmr::RunConfig& cfg, const std::string& axis_name) {
    RunContext ctx("disorder", cfg);
    const auto& p = cfg.system;
    tmr::SweepAxis axis = axis_name == "varphi" ? tmr::SweepAxis::Spacing : tmr::SweepAxis::J0;
    std::vector<double> grid =
        axis == tmr::SweepAxis::J0
            ? grid_or(cfg, "J0", 0.5 * p.Gamma, 12.0 * p.Gamma, 24)
            : grid_or(cfg, "varphi", 1.3 * kPi, 1.7 * kPi, 21);
    auto res = tmr::disorder_sweep(p, cfg.disorder, axis, grid, cfg.jobs,
                                  cfg.allow_combined_disorder);
    write_ensemble(ctx, "disorder.csv", res);
    ctx.finish();
    int censored = 0;
    for (const auto& pt : res.points) censored += pt.n_censored;
    return censored == 0 ? kExitOk : kExitPartial;
}

int cmd_sweep(const tmr::RunConfig& cfg, const std::string& axis) {
    RunContext ctx("sweep", cfg);
    const auto& p = cfg.system;
    std::vector<tmr::LifetimeSweepPoint> pts;
    if (axis == "varphi") {
        pts = tmr::lifetime_vs_varphi(p, grid_or(cfg, "varphi", 1.3 * kPi, 1.7 * kPi, 41),
                                     cfg.jobs);
    } else if (axis == "J0") {
        pts = tmr::lifetime_vs_j0(p, grid_or(cfg, "J0", 0.5 * p.Gamma, 12.0 * p.Gamma, 47),
                                 cfg.jobs);
    } else if (axis == "n_atoms") {
        std::vector<int> ns;
        for (int n = 1; n <= 61; n += 2) ns.push_back(n);
        pts = tmr::lifetime_vs_n_atoms(p, ns, cfg.jobs);
    } else {
        std::cerr << "unknown sweep axis: " << axis << "\n";
        return kExitConfig;
    }
    tmr::CsvWriter csv(ctx.path("sweep.csv"), {"axis_value", "lifetime", "ratio", "converged"});
    bool partial = false;
    for (const auto& pt : pts) {
        csv.field(pt.x).field(pt.lifetime).field(pt.ratio).field(pt.converged ? 1 : 0);
        csv.end_row();
        partial |= !pt.converged;
    }
    ctx.record(ctx.path("sweep.csv"));
    ctx.finish();
    return partial ? kExitPartial : kExitOk;
}

// ------------------------------------------------------------- reproduce

int reproduce_fig1_inset(tmr::RunConfig cfg) {
    // mirror band structure versus atom spacing
    RunContext ctx("reproduce_fig1-inset", cfg);
    auto bands = tmr::band_sweep_vs_spacing(cfg.system, tmr::linspace(0.0, 2.0 * kPi, 201));
    tmr::CsvWriter csv(ctx.path("fig1_inset_bands.csv"), {"varphi", "band_index", "re_energy"});
    for (const auto& pt : bands)
        for (std::size_t n = 0; n < pt.re_energies.size(); ++n) {
            csv.field(pt.varphi).field(static_cast<int>(n)).field(pt.re_energies[n]);
            csv.end_row();
        }
    ctx.record(ctx.path("fig1_inset_bands.csv"));
    ctx.finish();
    return kExitOk;
}

int reproduce_fig2(tmr::RunConfig cfg) {
    // polariton spectrum with and without the mirror
    RunContext ctx("reproduce_fig2", cfg);
    cfg.system = tmr::preset("fig2");
    auto h = tmr::build_full_heff(cfg.system, tmr::clean_realization(cfg.system));
    auto sol = tmr::eigendecompose(h);
    tmr::classify(sol, cfg.system);
    tmr::CsvWriter csv(ctx.path("fig2_eigen.csv"),
                      {"index", "re_energy", "im_energy", "decay_rate", "class"});
    for (int n = 0; n < h.dim(); ++n) {
        csv.field(n)
            .field(sol.eigenvalues(n).real())
            .field(sol.eigenvalues(n).imag())
            .field(sol.decay_rate(n))
            .field(tmr::to_string(sol.classes[n]));
        csv.end_row();
    }
    ctx.record(ctx.path("fig2_eigen.csv"));
    for (auto c : {tmr::StateClass::PolaritonPlus, tmr::StateClass::PolaritonMinus})
        if (auto i = sol.index_of(c))
            std::printf("%s: Re E = %.4g, -2 Im E = %.4g\n", tmr::to_string(c).c_str(),
                        sol.eigenvalues(*i).real(), sol.decay_rate(*i));
    ctx.finish();
    return kExitOk;
}

int reproduce_fig3(tmr::RunConfig cfg, char panel) {
    RunContext ctx(std::string("reproduce_fig3") + panel, cfg);
    auto strong = tmr::preset("fig3-strong");
    auto weak = tmr::preset("fig3-weak");
    switch (panel) {
        case 'a':    // weak-coupling dynamics
        case 'b': {  // strong-coupling dynamics
            auto p = panel == 'a' ? weak : strong;
            auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
            Eigen::VectorXcd s0 = Eigen::VectorXcd::Zero(h.dim());
            s0(0) = 1.0;
            auto ts = tmr::propagate(h, s0, tmr::default_lifetime_grid(p));
            write_timeseries(ctx, std::string("fig3") + panel + "_dynamics.csv", ts);
            SystemParams bare = p;
            bare.n_atoms = 0;
            auto hb = tmr::build_full_heff(bare, tmr::clean_realization(bare));
            Eigen::VectorXcd s0b = Eigen::VectorXcd::Zero(3);
            s0b(0) = 1.0;
            auto tsb = tmr::propagate(hb, s0b, tmr::default_lifetime_grid(bare));
            write_timeseries(ctx, std::string("fig3") + panel + "_bare.csv", tsb);
            break;
        }
        case 'c': {  // lifetime ratio versus varphi
            auto pts = tmr::lifetime_vs_varphi(strong, tmr::linspace(1.3 * kPi, 1.7 * kPi, 41),
                                              cfg.jobs);
            tmr::CsvWriter csv(ctx.path("fig3c_sweep.csv"), {"varphi", "ratio"});
            for (const auto& pt : pts) {
                csv.field(pt.x).field(pt.ratio);
                csv.end_row();
            }
            ctx.record(ctx.path("fig3c_sweep.csv"));
            break;
        }
        case 'd':    // weak-coupling scattering
        case 'e': {  // strong-coupling emission
            auto p = panel == 'd' ? weak : strong;
            auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
            const double span = 2.5 * std::sqrt(2.0) * p.g;
            auto grid = tmr::linspace(-span, span, 2001);
            if (panel == 'd') {
                auto pts = tmr::scatter_sweep(h, grid, cfg.jobs);
                tmr::CsvWriter csv(ctx.path("fig3d_scatter.csv"), {"delta", "R", "T"});
                for (const auto& pt : pts) {
                    csv.field(pt.delta).field(pt.reflectance).field(pt.transmittance);
                    csv.end_row();
                }
                ctx.record(ctx.path("fig3d_scatter.csv"));
            } else {
                auto s = tmr::emission_sweep(h, grid, cfg.jobs);
                tmr::CsvWriter csv(ctx.path("fig3e_emission.csv"), {"omega", "spectrum"});
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    csv.field(grid[i]).field(s[i]);
                    csv.end_row();
                }
                ctx.record(ctx.path("fig3e_emission.csv"));
            }
            break;
        }
        case 'f': {  // emission zoom on the subnatural Rabi peak
            auto h = tmr::build_full_heff(strong, tmr::clean_realization(strong));
            const double center = std::sqrt(2.0) * strong.g;
            auto grid = tmr::linspace(center - 2.0, center + 2.0, 2001);
            auto s = tmr::emission_sweep(h, grid, cfg.jobs);
            tmr::CsvWriter csv(ctx.path("fig3f_emission_zoom.csv"), {"omega", "spectrum"});
            for (std::size_t i = 0; i < grid.size(); ++i) {
                csv.field(grid[i]).field(s[i]);
                csv.end_row();
            }
            ctx.record(ctx.path("fig3f_emission_zoom.csv"));
            break;
        }
        default:
            return kExitConfig;
    }
    ctx.finish();
    return kExitOk;
}

int reproduce_fig4(tmr::RunConfig cfg, char panel) {
    RunContext ctx(std::string("reproduce_fig4") + panel, cfg);
    auto p = tmr::preset("fig2");
    switch (panel) {
        case 'a': {  // lifetime ratio versus J0
            auto pts =
                tmr::lifetime_vs_j0(p, tmr::linspace(0.5 * p.Gamma, 12.0 * p.Gamma, 47), cfg.jobs);
            tmr::CsvWriter csv(ctx.path("fig4a_sweep.csv"), {"J0", "ratio"});
            for (const auto& pt : pts) {
                csv.field(pt.x).field(pt.ratio);
                csv.end_row();
            }
            ctx.record(ctx.path("fig4a_sweep.csv"));
            break;
        }
        case 'b': {  // lifetime ratio versus N at fixed J0
            std::vector<int> ns;
            for (int n = 1; n <= 61; n += 2) ns.push_back(n);
            auto pts = tmr::lifetime_vs_n_atoms(p, ns, cfg.jobs);
            tmr::CsvWriter csv(ctx.path("fig4b_sweep.csv"), {"n_atoms", "ratio"});
            for (const auto& pt : pts) {
                csv.field(pt.x).field(pt.ratio);
                csv.end_row();
            }
            ctx.record(ctx.path("fig4b_sweep.csv"));
            break;
        }
        case 'c': {  // polariton emission rates versus J0
            tmr::CsvWriter csv(ctx.path("fig4c_rates.csv"),
                              {"J0", "rate_plus", "rate_minus", "energy_plus", "energy_minus"});
            for (double j0 : tmr::linspace(0.5 * p.Gamma, 12.0 * p.Gamma, 47)) {
                SystemParams q = p;
                q.J0 = j0;
                auto rates = tmr::polariton_channel_rates(
                    tmr::build_full_heff(q, tmr::clean_realization(q)));
                csv.field(j0)
                    .field(rates.rate_plus)
                    .field(rates.rate_minus)
                    .field(rates.energy_plus)
                    .field(rates.energy_minus);
                csv.end_row();
            }
            ctx.record(ctx.path("fig4c_rates.csv"));
            break;
        }
        default:
            return kExitConfig;
    }
    ctx.finish();
    return kExitOk;
}

int reproduce_fig5(tmr::RunConfig cfg, char panel) {
    RunContext ctx(std::string("reproduce_fig5") + panel, cfg);
    auto p = tmr::preset("fig2");
    tmr::DisorderSpec spec = cfg.disorder;
    spec.position_frac = spec.coupling_frac = spec.frequency_halfwidth = 0.0;
    if (spec.n_realizations <= 1) spec.n_realizations = 100;
    switch (panel) {
        case 'a':
            spec.position_frac = 0.02;
            break;
        case 'b':
            spec.coupling_frac = 0.2;
            break;
        case 'c':
            spec.frequency_halfwidth = p.g / std::sqrt(2.0);
            break;
        default:
            return kExitConfig;
    }
    auto grid = tmr::linspace(0.5 * p.Gamma, 12.0 * p.Gamma, 24);
    auto res = tmr::disorder_sweep(p, spec, tmr::SweepAxis::J0, grid, cfg.jobs);
    write_ensemble(ctx, std::string("fig5") + panel + "_disorder.csv", res);
    ctx.finish();
    return kExitOk;
}

int reproduce_figS2(tmr::RunConfig cfg) {
    RunContext ctx("reproduce_figS2", cfg);
    auto p = tmr::preset("fig2");
    // (a) edge-state decay versus J0 for the bare mirror
    auto scan = tmr::edge_decay_scan(p, tmr::linspace(0.05 * p.Gamma, 5.0 * p.Gamma, 100));
    tmr::CsvWriter csv(ctx.path("figS2a_edge_decay.csv"),
                      {"J0", "edge_decay", "edge_re", "classified"});
    for (const auto& pt : scan) {
        csv.field(pt.j0).field(pt.edge_decay).field(pt.edge_re).field(pt.classified ? 1 : 0);
        csv.end_row();
    }
    ctx.record(ctx.path("figS2a_edge_decay.csv"));
    // (b) mirror-only reflection, topological versus trivial
    for (bool trivial : {false, true}) {
        SystemParams q = p;
        q.gamma0 = 0.0;
        if (trivial) q.J0 = 0.0;
        auto h = tmr::build_mirror_heff(q, tmr::clean_realization(q));
        auto pts = tmr::scatter_sweep(h, tmr::linspace(-4.0 * q.Gamma, 4.0 * q.Gamma, 2001),
                                     cfg.jobs);
        const std::string name =
            trivial ? "figS2b_trivial_scatter.csv" : "figS2b_topo_scatter.csv";
        tmr::CsvWriter scsv(ctx.path(name), {"delta", "R", "T"});
        for (const auto& pt : pts) {
            scsv.field(pt.delta).field(pt.reflectance).field(pt.transmittance);
            scsv.end_row();
        }
        ctx.record(ctx.path(name));
    }
    ctx.finish();
    return kExitOk;
}

int reproduce_figS3(tmr::RunConfig cfg) {
    // bound polaritons: decay versus kappa at gamma0 = 0
    RunContext ctx("reproduce_figS3", cfg);
    auto p = tmr::preset("fig2");
    p.gamma0 = 0.0;
    tmr::CsvWriter csv(ctx.path("figS3_bound_polaritons.csv"),
                      {"kappa", "polariton_decay_plus", "polariton_decay_minus"});
    for (double kappa : {2.0 * p.Gamma, 4.0 * p.Gamma, 8.0 * p.Gamma}) {
        SystemParams q = p;
        q.kappa = kappa;
        auto sol = tmr::eigendecompose(tmr::build_full_heff(q, tmr::clean_realization(q)));
        tmr::classify(sol, q);
        double dp = 0.0, dm = 0.0;
        if (auto i = sol.index_of(tmr::StateClass::PolaritonPlus)) dp = sol.decay_rate(*i);
        if (auto i = sol.index_of(tmr::StateClass::PolaritonMinus)) dm = sol.decay_rate(*i);
        csv.field(kappa).field(dp).field(dm);
        csv.end_row();
    }
    ctx.record(ctx.path("figS3_bound_polaritons.csv"));
    ctx.finish();
    return kExitOk;
}

int reproduce_figS4(tmr::RunConfig cfg) {
    // dissipation spectrum and channel structure
    RunContext ctx("reproduce_figS4", cfg);
    auto p = tmr::preset("fig2");
    auto h = tmr::build_full_heff(p, tmr::clean_realization(p));
    auto spec = tmr::dissipation_spectrum(h);
    tmr::CsvWriter csv(ctx.path("figS4_dissipation.csv"),
                      {"index", "rate", "label", "cavity_weight", "even_weight", "odd_weight"});
    for (std::size_t n = 0; n < spec.channels.size(); ++n) {
        const auto& ch = spec.channels[n];
        csv.field(static_cast<int>(n))
            .field(ch.rate)
            .field(tmr::to_string(ch.label))
            .field(ch.cavity_weight)
            .field(ch.even_weight)
            .field(ch.odd_weight);
        csv.end_row();
    }
    ctx.record(ctx.path("figS4_dissipation.csv"));
    ctx.finish();
    return kExitOk;
}

int cmd_reproduce(const tmr::RunConfig& cfg, const std::string& figure) {
    if (figure == "fig1-inset") return reproduce_fig1_inset(cfg);
    if (figure == "fig2") return reproduce_fig2(cfg);
    if (figure.size() == 5 && figure.substr(0, 4) == "fig3" && figure[4] >= 'a' &&
        figure[4] <= 'f')
        return reproduce_fig3(cfg, figure[4]);
    if (figure.size() == 5 && figure.substr(0, 4) == "fig4" && figure[4] >= 'a' &&
        figure[4] <= 'c')
        return reproduce_fig4(cfg, figure[4]);
    if (figure.size() == 5 && figure.substr(0, 4) == "fig5" && figure[4] >= 'a' &&
        figure[4] <= 'c')
        return reproduce_fig5(cfg, figure[4]);
    if (figure == "figS2") return reproduce_figS2(cfg);
    if (figure == "figS3") return reproduce_figS3(cfg);
    if (figure == "figS4") return reproduce_figS4(cfg);
    std::cerr << "unknown figure id: " << figure << "\n";
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-excitation dynamics of a chiral cavity-QED network with a "
                 "topological atom mirror"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--config", g.config_path, "INI config file ([system]/[disorder]/[run])");
    app.add_option("--preset", g.preset_name, "parameter preset")
        ->check(CLI::IsMember(tmr::preset_names()));
    app.add_option("--jobs", g.jobs, "worker threads");
    app.add_option("--seed", g.seed, "disorder ensemble seed")
        ->each([&](const std::string&) { g.seed_given = true; });
    app.add_option("--out-dir", g.out_dir, "output directory");
    app.add_option("--grid", g.grid, "axis=start:stop:count (accepts pi suffix)");

    int n_atoms_override = -1;
    app.add_option("--n-atoms", n_atoms_override, "override atom count");

    bool mirror_only = false;
    auto* c_eigen = app.add_subcommand("eigen", "eigenvalues, weights, and state classes");
    c_eigen->add_flag("--mirror-only", mirror_only, "bare atom mirror");
    auto* c_bands = app.add_subcommand("bands", "mirror bands versus atom spacing");
    auto* c_dyn = app.add_subcommand("dynamics", "time evolution of the excited emitter");
    double t_max = 0.0;
    int n_times = 4001;
    c_dyn->add_option("--t-max", t_max, "time horizon (default 1.5/gamma0)");
    c_dyn->add_option("--n-times", n_times, "sample count");
    auto* c_life = app.add_subcommand("lifetime", "emitter lifetime and enhancement ratio");
    auto* c_scat = app.add_subcommand("scatter", "reflection and transmission spectra");
    c_scat->add_flag("--mirror-only", mirror_only, "bare atom mirror");
    auto* c_emis = app.add_subcommand("emission", "emission spectrum and sum rule");
    auto* c_diss = app.add_subcommand("dissipation", "dissipation channels and rates");
    auto* c_dis = app.add_subcommand("disorder", "disorder-averaged lifetime statistics");
    std::string dis_axis = "J0";
    c_dis->add_option("--axis", dis_axis, "J0 or varphi");
    auto* c_sweep = app.add_subcommand("sweep", "clean lifetime sweeps");
    std::string sweep_axis = "varphi";
    c_sweep->add_option("--axis", sweep_axis, "varphi, J0, or n_atoms");
    auto* c_rep = app.add_subcommand("reproduce", "regenerate the data behind a figure");
    std::string figure;
    c_rep->add_option("figure", figure, "figure id (fig2, fig3a..f, fig4a..c, fig5a..c, "
                                        "fig1-inset, figS2, figS3, figS4)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        tmr::RunConfig cfg = resolve_config(g);
        if (n_atoms_override >= 0) {
            cfg.system.n_atoms = n_atoms_override;
            cfg.system.detunings.clear();
            cfg.system.validate();
        }
        if (c_eigen->parsed()) return cmd_eigen(cfg, mirror_only);
        if (c_bands->parsed()) return cmd_bands(cfg);
        if (c_dyn->parsed()) return cmd_dynamics(cfg, t_max, n_times);
        if (c_life->parsed()) return cmd_lifetime(cfg);
        if (c_scat->parsed()) return cmd_scatter(cfg, mirror_only);
        if (c_emis->parsed()) return cmd_emission(cfg);
        if (c_diss->parsed()) return cmd_dissipation(cfg);
        if (c_dis->parsed()) return cmd_disorder(cfg, dis_axis);
        if (c_sweep->parsed()) return cmd_sweep(cfg, sweep_axis);
        if (c_rep->parsed()) return cmd_reproduce(cfg, figure);
    } catch (const tmr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
