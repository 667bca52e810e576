#include <doctest.h>

#include <cmath>
#include <complex>

#include "topomirror/hamiltonian.hpp"
#include "topomirror/util.hpp"

using namespace topomirror;
using std::complex;

namespace {
constexpr double kPi = 3.14159265358979323846;
const complex<double> I(0.0, 1.0);

SystemParams random_params(SplitMix64& rng) {
    SystemParams p;
    p.g = 30.0 * rng.next_uniform();
    p.kappa = 0.1 + 30.0 * rng.next_uniform();
    p.gamma0 = rng.next_uniform() < 0.3 ? 0.0 : 2.0 * rng.next_uniform();
    p.Gamma = 0.1 + 10.0 * rng.next_uniform();
    p.J0 = 50.0 * rng.next_uniform();
    p.phi_dim = kPi * rng.next_uniform();
    p.n_atoms = 1 + static_cast<int>(rng.next() % 12);
    p.varphi = 2.0 * kPi * rng.next_uniform();
    p.phi1 = 2.0 * kPi * rng.next_uniform();
    return p;
}
}  // namespace

TEST_CASE("bare cavity QED block matches the 3x3 of the strong-coupling rates") {
    SystemParams p = preset("fig2");
    p.n_atoms = 0;
    auto h = build_full_heff(p, clean_realization(p));
    REQUIRE(h.dim() == 3);
    CHECK(h.matrix(0, 0) == -0.5 * I);
    CHECK(h.matrix(1, 1) == -10.0 * I);
    CHECK(h.matrix(2, 2) == -10.0 * I);
    CHECK(h.matrix(0, 1) == complex<double>(20.0));
    CHECK(h.matrix(1, 0) == complex<double>(20.0));
    CHECK(h.matrix(0, 2) == complex<double>(20.0));
    CHECK(h.matrix(2, 0) == complex<double>(20.0));
    CHECK(h.matrix(1, 2) == complex<double>(0.0));
    CHECK(h.matrix(2, 1) == complex<double>(0.0));
}

TEST_CASE("cascaded couplings are one-way") {
    auto p = preset("fig2");
    auto h = build_full_heff(p, clean_realization(p));
    // atom 1 sits at phi = 0: -i sqrt(kappa Gamma) = -10i
    CHECK(std::abs(h.matrix(3, 1) - (-10.0 * I)) < 1e-14);
    CHECK(h.matrix(1, 3) == complex<double>(0.0));
    CHECK(std::abs(h.matrix(2, 3) - (-10.0 * I)) < 1e-14);
    CHECK(h.matrix(3, 2) == complex<double>(0.0));
    // atom 2 at phi = 3pi/2: extra phase e^{i 3pi/2} = -i
    CHECK(std::abs(h.matrix(4, 1) - (-10.0 * I) * (-I)) < 1e-12);
}

TEST_CASE("atom block combines SSH bonds with waveguide-mediated hopping") {
    auto p = preset("fig2");
    auto h = build_full_heff(p, clean_realization(p));
    // nearest neighbors: J- + (-i Gamma e^{i 3pi/2}) = J- - Gamma
    const double jm = p.J0 * (1.0 - std::cos(p.phi_dim));
    CHECK(std::abs(h.matrix(3, 4) - complex<double>(jm - 5.0, 0.0)) < 1e-12);
    CHECK(std::abs(h.matrix(4, 3) - h.matrix(3, 4)) < 1e-14);
    // next-nearest: phase difference 3pi, e^{i 3pi} = -1, no direct bond
    CHECK(std::abs(h.matrix(3, 5) - (-I * 5.0 * std::exp(I * 3.0 * kPi))) < 1e-11);
    // diagonal: delta - i(Gamma + gamma0/2)
    CHECK(std::abs(h.matrix(3, 3) - complex<double>(0.0, -5.5)) < 1e-14);
}

TEST_CASE("mirror Hamiltonian equals the atom sub-block of the full one") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = random_params(rng);
        auto r = clean_realization(p);
        auto full = build_full_heff(p, r);
        auto mirror = build_mirror_heff(p, r);
        const int n = p.n_atoms;
        CHECK((full.matrix.block(3, 3, n, n) - mirror.matrix).norm() == 0.0);
    }
}

TEST_CASE("two-site mirror at J0 = 0 reduces to the analytic form") {
    SystemParams p;
    p.gamma0 = 0.0;
    p.Gamma = 1.0;
    p.J0 = 0.0;
    p.n_atoms = 2;
    p.varphi = 1.5 * kPi;
    auto h = build_mirror_heff(p, clean_realization(p));
    // -i Gamma e^{i 3pi/2} = -Gamma
    CHECK(std::abs(h.matrix(0, 0) - (-I)) < 1e-14);
    CHECK(std::abs(h.matrix(1, 1) - (-I)) < 1e-14);
    CHECK(std::abs(h.matrix(0, 1) - complex<double>(-1.0)) < 1e-14);
    CHECK(std::abs(h.matrix(1, 0) - complex<double>(-1.0)) < 1e-14);
}

TEST_CASE("dissipation matrix decomposes into free-space and channel parts") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_params(rng);
        DisorderSpec spec;
        spec.position_frac = 0.1;
        spec.coupling_frac = 0.1;
        spec.frequency_halfwidth = 0.5;
        spec.seed = rng.next();
        auto r = sample_realization(p, spec, 0);
        auto h = build_full_heff(p, r);
        auto gamma = dissipation_matrix(h.matrix);

        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(h.dim(), h.dim());
        d(0, 0) = 1.0;
        for (int j = 0; j < p.n_atoms; ++j) d(3 + j, 3 + j) = 1.0;
        auto ur = channel_vector_right(h);
        auto ul = channel_vector_left(h);
        Eigen::MatrixXcd expected =
            p.gamma0 * d + ur * ur.adjoint() + ul * ul.adjoint();
        CHECK((gamma - expected).cwiseAbs().maxCoeff() < 1e-12);

        // Hermitian and PSD
        CHECK((gamma - gamma.adjoint()).norm() < 1e-12 * gamma.norm());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gamma);
        CHECK(es.eigenvalues().minCoeff() > -1e-10 * gamma.norm());

        // trace identity: gamma0 (N+1) + 2 kappa + 2 N Gamma
        const double tr = gamma.trace().real();
        CHECK(tr == doctest::Approx(p.gamma0 * (p.n_atoms + 1) + 2.0 * p.kappa +
                                    2.0 * p.n_atoms * p.Gamma)
                        .epsilon(1e-12));
    }
}

TEST_CASE("matrix depends on positions only through the phases") {
    auto p = preset("fig2");
    auto r = clean_realization(p);
    auto h1 = build_full_heff(p, r);
    for (auto& phi : r.phases) phi += 2.0 * kPi;  // one guide wavelength
    auto h2 = build_full_heff(p, r);
    CHECK((h1.matrix - h2.matrix).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("dimension mismatches are rejected") {
    auto p = preset("fig2");
    auto r = clean_realization(p);
    r.phases.pop_back();
    CHECK_THROWS_AS((void)build_full_heff(p, r), std::invalid_argument);
    SystemParams empty;
    empty.Gamma = 1.0;
    CHECK_THROWS_AS((void)build_mirror_heff(empty, clean_realization(empty)),
                    std::invalid_argument);
}

TEST_CASE("basis labels follow the storage order") {
    SystemParams p = preset("fig2");
    p.n_atoms = 2;
    auto h = build_full_heff(p, clean_realization(p));
    auto labels = h.basis_labels();
    REQUIRE(labels.size() == 5);
    CHECK(labels[0] == "QE");
    CHECK(labels[1] == "CCW");
    CHECK(labels[2] == "CW");
    CHECK(labels[3] == "Atom(1)");
    CHECK(labels[4] == "Atom(2)");
}
