#include "topomirror/response.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "topomirror/spectral.hpp"
#include "topomirror/util.hpp"

namespace topomirror {

namespace {
const std::complex<double> I(0.0, 1.0);

Eigen::FullPivLU<Eigen::MatrixXcd> resolvent_lu(const EffectiveHamiltonian& h, double freq) {
    Eigen::MatrixXcd m =
        freq * Eigen::MatrixXcd::Identity(h.dim(), h.dim()) - h.matrix;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    if (!lu.isInvertible())
        throw std::runtime_error("resolvent singular at this frequency");
    return lu;
}
}  // namespace

Eigen::VectorXcd steady_state(const EffectiveHamiltonian& h, double delta) {
    return resolvent_lu(h, delta).solve(Eigen::VectorXcd(-I * channel_vector_right(h)));
}

ScatterPoint reflection_transmission(const EffectiveHamiltonian& h, double delta) {
    const Eigen::VectorXcd s = steady_state(h, delta);
    ScatterPoint pt;
    pt.delta = delta;
    pt.r_amp = channel_vector_left(h).dot(s);
    pt.t_amp = 1.0 + channel_vector_right(h).dot(s);
    pt.reflectance = std::norm(pt.r_amp);
    pt.transmittance = std::norm(pt.t_amp);
    pt.loss = 1.0 - pt.reflectance - pt.transmittance;
    return pt;
}

std::vector<ScatterPoint> scatter_sweep(const EffectiveHamiltonian& h,
                                        const std::vector<double>& deltas, int jobs) {
    std::vector<ScatterPoint> out(deltas.size());
    parallel_for(deltas.size(), jobs,
                 [&](std::size_t i) { out[i] = reflection_transmission(h, deltas[i]); });
    return out;
}

double emission_spectrum(const EffectiveHamiltonian& h, double omega) {
    if (h.mirror_only)
        throw std::invalid_argument("emission spectrum needs the full system");
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(h.dim());
    e0(0) = 1.0;
    const std::complex<double> g00 = resolvent_lu(h, omega).solve(e0)(0);
    return (I * g00).real();
}

std::vector<double> emission_sweep(const EffectiveHamiltonian& h,
                                   const std::vector<double>& omegas, int jobs) {
    std::vector<double> out(omegas.size());
    parallel_for(omegas.size(), jobs,
                 [&](std::size_t i) { out[i] = emission_spectrum(h, omegas[i]); });
    return out;
}

double emission_spectrum_eigen(const EffectiveHamiltonian& h, double omega) {
    if (h.mirror_only)
        throw std::invalid_argument("emission spectrum needs the full system");
    auto sol = eigendecompose(h);
    const Eigen::MatrixXcd left = sol.right_vectors.fullPivLu().inverse();
    std::complex<double> g00 = 0.0;
    for (int n = 0; n < h.dim(); ++n)
        g00 += sol.right_vectors(0, n) * left(n, 0) / (omega - sol.eigenvalues(n));
    return (I * g00).real();
}

namespace {

double simpson(const EffectiveHamiltonian& h, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    auto f = [&](double x) {
        double c = std::cos(x);
        return emission_spectrum(h, std::tan(x)) / (c * c);
    };
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(h, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(h, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double emission_sum(const EffectiveHamiltonian& h, double tol) {
    // omega = tan(x) compactifies the real line to (-pi/2, pi/2); keep a
    // margin from the poles of the substitution
    const double kHalfPi = 1.57079632679489662;
    const double a = -kHalfPi + 1e-8, b = kHalfPi - 1e-8;
    auto f = [&](double x) {
        double c = std::cos(x);
        return emission_spectrum(h, std::tan(x)) / (c * c);
    };
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    return simpson(h, a, m, fa, flm, fm, left, 0.5 * tol, 48) +
           simpson(h, m, b, fm, frm, fb, right, 0.5 * tol, 48);
}

}  // namespace topomirror
