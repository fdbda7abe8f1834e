#include "qcap/circulator.hpp"

#include <cmath>

#include "qcap/capacitance.hpp"
#include "qcap/constants.hpp"

namespace qcap {

namespace {

using namespace std::complex_literals;

std::complex<double> phase(double p) { return std::polar(1.0, p); }

}  // namespace

void CirculatorConfig::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(kappa[i] > 0.0)) throw InvalidArgument("decay rates must be positive");
        if (!(g[i] >= 0.0)) throw InvalidArgument("coupling strengths must be non-negative");
        if (!std::isfinite(omega[i]) || !std::isfinite(phi[i]) || !std::isfinite(rotating_detuning[i]))
            throw InvalidArgument("circulator parameters must be finite");
    }
}

CirculatorConfig reference_circulator(double gauge_flux, Frame frame) {
    const double w1 = units::ghz_to_rad_s(1.0);
    const double w2 = units::ghz_to_rad_s(1.05);
    const double g = units::ghz_to_rad_s(1.0);
    CirculatorConfig c;
    c.omega = {w1, w2, w1 + w2};
    c.g = {g, g, g};
    c.kappa = {2 * g, 2 * g, 2 * g};
    c.phi = {gauge_flux, 0.0, 0.0};
    c.frame = frame;
    return c;
}

bool pump_constraint_check(double Omega_1, double Omega_2, double Omega_3, double tol) {
    if (!(tol >= 0.0)) throw InvalidArgument("tolerance must be non-negative");
    return std::abs(Omega_1 + Omega_3 - Omega_2) <= tol;
}

Matrix3c coupling_hamiltonian(const CirculatorConfig& config) {
    Matrix3c h = Matrix3c::Zero();
    h(1, 0) = config.g[2] * phase(config.phi[2]);  // a2^dag a1
    h(2, 1) = config.g[0] * phase(config.phi[0]);  // a3^dag a2
    h(2, 0) = config.g[1] * phase(config.phi[1]);  // a3^dag a1
    h(0, 1) = std::conj(h(1, 0));
    h(1, 2) = std::conj(h(2, 1));
    h(0, 2) = std::conj(h(2, 0));
    return h;
}

Matrix3c langevin_matrix(const CirculatorConfig& config) {
    config.validate();
    Matrix3c m = -1i * coupling_hamiltonian(config);
    for (int n = 0; n < 3; ++n) {
        const double w = config.frame == Frame::LabFrame ? config.omega[n] : config.rotating_detuning[n];
        m(n, n) = -(1i * w + config.kappa[n] / 2.0);
    }
    return m;
}

Matrix3c hamiltonian_generator(const Matrix3c& M, const std::array<double, 3>& kappa) {
    Matrix3c h = 1i * M;
    for (int n = 0; n < 3; ++n) h(n, n) += 1i * kappa[n] / 2.0;
    return h;
}

Matrix3c scattering_matrix(const Matrix3c& M, const std::array<double, 3>& kappa, double delta) {
    for (double k : kappa)
        if (!(k > 0.0)) throw InvalidArgument("decay rates must be positive");
    const Matrix3c A = -1i * delta * Matrix3c::Identity() - M;
    Matrix3c S = Matrix3c::Identity();
    for (int col = 0; col < 3; ++col) {
        Vector3c rhs = Vector3c::Zero();
        rhs(col) = std::sqrt(kappa[col]);
        const Vector3c x = complex_solve(A, rhs);
        for (int row = 0; row < 3; ++row) S(row, col) -= std::sqrt(kappa[row]) * x(row);
    }
    return S;
}

Matrix3c scattering_matrix(const CirculatorConfig& config, double delta) {
    return scattering_matrix(langevin_matrix(config), config.kappa, delta);
}

SweepResult sweep(const CirculatorConfig& config, double delta_min, double delta_max, int n_points) {
    if (n_points < 2) throw InvalidArgument("sweep needs at least 2 points");
    const Matrix3c M = langevin_matrix(config);
    SweepResult r;
    r.detuning_grid = linspace(delta_min, delta_max, n_points);
    const auto n = r.detuning_grid.size();
    r.S_of_delta.resize(n);
    r.ratio_13_31.resize(n);
    r.insertion_loss_dB.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix3c S = scattering_matrix(M, config.kappa, r.detuning_grid[i]);
        const double s13 = std::abs(conversion(S, 1, 3));
        const double s31 = std::abs(conversion(S, 3, 1));
        r.S_of_delta[i] = S;
        r.ratio_13_31[i] = s13 / s31;
        r.insertion_loss_dB[i] = -10.0 * std::log10(s13 * s13);
    }
    return r;
}

}  // namespace qcap
