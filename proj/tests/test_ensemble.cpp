#include <doctest.h>

#include <cmath>

#include "topomirror/ensemble.hpp"
#include "topomirror/util.hpp"

using namespace topomirror;

TEST_CASE("zero disorder yields zero spread") {
    auto p = preset("fig2");
    DisorderSpec spec;
    spec.n_realizations = 5;
    auto res = disorder_sweep(p, spec, SweepAxis::J0, {8.0 * p.Gamma}, 4);
    REQUIRE(res.points.size() == 1);
    const auto& pt = res.points[0];
    CHECK(pt.std_dev == 0.0);
    CHECK(pt.mean == pt.min);
    CHECK(pt.mean == pt.max);
    CHECK(pt.n_censored == 0);
}

TEST_CASE("statistics respect their own bounds") {
    auto p = preset("fig2");
    DisorderSpec spec;
    spec.position_frac = 0.02;
    spec.seed = 9;
    spec.n_realizations = 12;
    auto res =
        disorder_sweep(p, spec, SweepAxis::J0, {6.0 * p.Gamma, 8.0 * p.Gamma}, 4);
    for (const auto& pt : res.points) {
        CHECK(pt.mean >= pt.min - 1e-12);
        CHECK(pt.mean <= pt.max + 1e-12);
        CHECK(pt.std_dev >= 0.0);
        CHECK(pt.n_converged + pt.n_censored == spec.n_realizations);
    }
}

TEST_CASE("identical seeds reproduce bit-identical results regardless of jobs") {
    auto p = preset("fig2");
    DisorderSpec spec;
    spec.coupling_frac = 0.2;
    spec.seed = 123;
    spec.n_realizations = 8;
    std::vector<double> grid = {7.0 * p.Gamma, 9.0 * p.Gamma};
    auto serial = disorder_sweep(p, spec, SweepAxis::J0, grid, 1);
    auto parallel = disorder_sweep(p, spec, SweepAxis::J0, grid, 8);
    REQUIRE(serial.points.size() == parallel.points.size());
    for (std::size_t i = 0; i < serial.points.size(); ++i) {
        CHECK(serial.points[i].mean == parallel.points[i].mean);
        CHECK(serial.points[i].std_dev == parallel.points[i].std_dev);
        CHECK(serial.points[i].ratios == parallel.points[i].ratios);
    }
    CHECK(serial.tau0 == parallel.tau0);
}

TEST_CASE("combined disorder needs the explicit flag") {
    auto p = preset("fig2");
    DisorderSpec spec;
    spec.position_frac = 0.02;
    spec.coupling_frac = 0.2;
    spec.n_realizations = 2;
    CHECK_THROWS_AS(
        (void)disorder_sweep(p, spec, SweepAxis::J0, {8.0 * p.Gamma}, 1, false),
        std::invalid_argument);
    CHECK_NOTHROW(
        (void)disorder_sweep(p, spec, SweepAxis::J0, {8.0 * p.Gamma}, 2, true));
}

TEST_CASE("spacing axis drives varphi") {
    auto p = preset("fig2");
    DisorderSpec spec;
    spec.n_realizations = 1;
    constexpr double kPi = 3.14159265358979323846;
    auto res = disorder_sweep(p, spec, SweepAxis::Spacing,
                              {1.4 * kPi, 1.5 * kPi, 1.6 * kPi}, 3);
    REQUIRE(res.points.size() == 3);
    // the optimal spacing gives the largest enhancement
    CHECK(res.points[1].mean > res.points[0].mean);
    CHECK(res.points[1].mean > res.points[2].mean);
}
