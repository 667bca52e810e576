#include <doctest.h>

#include <cmath>

#include "topomirror/config.hpp"
#include "topomirror/io.hpp"

using namespace topomirror;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("full config round trip") {
    auto cfg = parse_config_text(R"(
# strong-coupling run
[system]
g = 20
kappa = 20
gamma0 = 1
Gamma = 5
J0 = 8 Gamma
phi_dim = 0.3pi
n_atoms = 31
varphi = 1.5pi
phi1 = 0

[disorder]
position_frac = 0.02
seed = 7
n_realizations = 100

[run]
jobs = 4
out_dir = results
grid = J0=0.5:12:24
)");
    CHECK(cfg.system.g == 20.0);
    CHECK(cfg.system.J0 == 40.0);
    CHECK(cfg.system.phi_dim == doctest::Approx(0.3 * kPi));
    CHECK(cfg.system.varphi == doctest::Approx(1.5 * kPi));
    CHECK(cfg.system.n_atoms == 31);
    CHECK(cfg.disorder.position_frac == 0.02);
    CHECK(cfg.disorder.seed == 7);
    CHECK(cfg.disorder.n_realizations == 100);
    CHECK(cfg.jobs == 4);
    CHECK(cfg.out_dir == "results");
    CHECK(cfg.grid == "J0=0.5:12:24");
}

TEST_CASE("rate suffixes resolve against the declared units") {
    auto cfg = parse_config_text(R"(
[system]
gamma0 = 2
Gamma = 3
g = 10 g0
kappa = 4 Gamma
J0 = 5 Gamma
)");
    CHECK(cfg.system.g == 20.0);
    CHECK(cfg.system.kappa == 12.0);
    CHECK(cfg.system.J0 == 15.0);
}

TEST_CASE("dissipationless emitter pins the unit to Gamma") {
    auto cfg = parse_config_text(R"(
[system]
gamma0 = 0
J0 = 2 Gamma
n_atoms = 3
)");
    CHECK(cfg.system.Gamma == 1.0);
    CHECK(cfg.system.J0 == 2.0);
}

TEST_CASE("preset key loads the bundle and allows overrides") {
    auto cfg = parse_config_text(R"(
[system]
preset = fig3-weak
n_atoms = 15
)");
    CHECK(cfg.system.g == 5.0);
    CHECK(cfg.system.n_atoms == 15);
    CHECK(cfg.preset_name == "fig3-weak");
}

TEST_CASE("malformed configs are rejected with ConfigError") {
    CHECK_THROWS_AS((void)parse_config_text("[what]\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("[system]\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("[system]\ng = abc\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("g = 1\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("[system]\nGamma = 1 Gamma\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("[system]\ngamma0 = 0\ng = 1 g0\n"), ConfigError);
    CHECK_THROWS_AS((void)parse_config_text("[run]\njobs = 0\n[system]\nGamma = 1\n"),
                    ConfigError);
}

TEST_CASE("grid specs parse with pi multiples") {
    auto g = parse_grid("varphi=1.3pi:1.7pi:41");
    CHECK(g.axis == "varphi");
    CHECK(g.start == doctest::Approx(1.3 * kPi));
    CHECK(g.stop == doctest::Approx(1.7 * kPi));
    CHECK(g.count == 41);
    auto v = g.values();
    REQUIRE(v.size() == 41);
    CHECK(v.front() == doctest::Approx(1.3 * kPi));
    CHECK(v.back() == doctest::Approx(1.7 * kPi));

    CHECK_THROWS_AS((void)parse_grid("nope"), ConfigError);
    CHECK_THROWS_AS((void)parse_grid("J0=1:2"), ConfigError);
    CHECK_THROWS_AS((void)parse_grid("J0=1:2:0"), ConfigError);
}

TEST_CASE("config echo is valid json with every section") {
    RunConfig cfg;
    cfg.system = preset("fig2");
    auto text = config_to_json(cfg);
    CHECK(text.find("\"system\"") != std::string::npos);
    CHECK(text.find("\"disorder\"") != std::string::npos);
    CHECK(text.find("\"run\"") != std::string::npos);
}

TEST_CASE("csv formatting survives a round trip at full precision") {
    const double x = 0.1 + 0.2;  // not representable prettily
    CHECK(std::stod(format_double(x)) == x);
    CHECK(std::stod(format_double(1e-300)) == 1e-300);
}
