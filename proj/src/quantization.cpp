#include "qcap/quantization.hpp"

#include <cmath>
#include <numbers>

#include "qcap/linalg.hpp"

namespace qcap {

namespace {

using K = PhysicalConstants;
constexpr double kPi = std::numbers::pi;
const double kLn16 = std::log(16.0);

void require_positive_area(double s) {
    if (!(s > 0.0)) throw NonPositiveArea(s);
}

// (a + a^dag) on the first n Fock states.
Eigen::MatrixXd position_quadrature(int n) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        x(k - 1, k) = std::sqrt(double(k));
        x(k, k - 1) = std::sqrt(double(k));
    }
    return x;
}

// Eigenvalue closest to the first-order estimate of level n.
double physical_level(const Eigen::VectorXd& eigenvalues, int n, double tau_omega) {
    const double target = first_order_level(n, tau_omega);
    Eigen::Index best;
    (eigenvalues.array() - target).abs().minCoeff(&best);
    return eigenvalues(best);
}

}  // namespace

OscillatorSpec make_oscillator(const CapacitorDesign& design, double temperature_T, double omega,
                               int fock_cutoff) {
    OscillatorSpec spec{omega, nonlinear_tau(design.area_S, temperature_T, design.v_F), design.area_S,
                        temperature_T, fock_cutoff, design.v_F};
    validate(spec);
    return spec;
}

void validate(const OscillatorSpec& spec) {
    if (!(spec.omega > 0.0)) throw InvalidArgument("mode frequency must be positive");
    if (!(spec.tau >= 0.0)) throw InvalidArgument("tau must be non-negative");
    if (spec.fock_cutoff < kMinFockCutoff)
        throw InvalidArgument("Fock cutoff must be at least " + std::to_string(kMinFockCutoff));
}

PhotonAmplitude photon_amplitude(const OscillatorSpec& spec) {
    const double kT = thermal_energy(spec.temperature_T);
    require_positive_area(spec.area_S);
    if (!(spec.omega > 0.0)) throw InvalidArgument("mode frequency must be positive");
    const double chi = std::sqrt(kT * kLn16 / (2.0 * kPi * spec.area_S * K::hbar * spec.v_F * spec.v_F));
    return {chi, chi * std::sqrt(spec.omega)};
}

double nonlinear_tau(double area_S, double temperature_T, double v_F) {
    const double kT = thermal_energy(temperature_T);
    require_positive_area(area_S);
    const double hbar3 = K::hbar * K::hbar * K::hbar;
    return kPi * hbar3 * v_F * v_F / (8.0 * kLn16 * kLn16 * area_S * kT * kT * kT);
}

double nonlinear_tau_via_chi(double area_S, double temperature_T, double chi, double v_F) {
    const double kT = thermal_energy(temperature_T);
    require_positive_area(area_S);
    const double hbar5 = std::pow(K::hbar, 5);
    const double vf6 = std::pow(v_F, 6);
    return kPi * kPi * kPi * area_S * hbar5 * vf6 * std::pow(chi, 4) /
           (2.0 * std::pow(kLn16, 4) * std::pow(kT, 5));
}

double resonant_inductance(const CapacitorDesign& design, double temperature_T, double omega) {
    require_positive_area(design.area_S);
    if (!(omega > 0.0)) throw InvalidArgument("mode frequency must be positive");
    const double c0 = linear_capacitance_C0(design, temperature_T);
    return 1.0 / (omega * omega * design.area_S * c0);
}

HamiltonianCoefficients hamiltonian_coefficients(const OscillatorSpec& spec) {
    return {K::hbar * spec.omega, K::hbar * spec.tau * spec.omega * spec.omega / 4.0};
}

Eigen::MatrixXd fock_hamiltonian(int cutoff, double tau_omega) {
    if (cutoff < 1) throw InvalidArgument("Fock cutoff must be positive");
    const Eigen::MatrixXd x = position_quadrature(cutoff);
    const Eigen::MatrixXd x2 = x * x;
    Eigen::MatrixXd h = -(tau_omega / 4.0) * (x2 * x2);
    for (int n = 0; n < cutoff; ++n) h(n, n) += n + 0.5;
    return h;
}

double first_order_level(int n, double tau_omega) {
    return n + 0.5 - (tau_omega / 4.0) * (6.0 * n * n + 6.0 * n + 3.0);
}

SpectrumResult fock_diagonalize(const OscillatorSpec& spec) {
    validate(spec);
    const double tw = spec.tau_omega();
    const double hw = K::hbar * spec.omega;

    const Eigen::VectorXd levels = symmetric_eigenvalues<double>(fock_hamiltonian(spec.fock_cutoff, tw));
    const Eigen::VectorXd check =
        symmetric_eigenvalues<double>(fock_hamiltonian(spec.fock_cutoff + kConvergenceCutoffStep, tw));
    std::array<double, 3> e{};
    for (int n = 0; n < 3; ++n) {
        e[n] = physical_level(levels, n, tw);
        const double drift = std::abs(physical_level(check, n, tw) - e[n]) / std::abs(e[n]);
        if (!(drift < kConvergenceTolerance)) {
            throw CutoffNotConverged("level " + std::to_string(n) + " moved by " + std::to_string(drift) +
                                     " (relative) when the cutoff grew from " +
                                     std::to_string(spec.fock_cutoff) + " to " +
                                     std::to_string(spec.fock_cutoff + kConvergenceCutoffStep));
        }
    }

    SpectrumResult r;
    r.eigenvalues.reserve(static_cast<std::size_t>(levels.size()));
    for (Eigen::Index i = 0; i < levels.size(); ++i) r.eigenvalues.push_back(levels(i) * hw);
    for (int n = 0; n < 3; ++n) r.levels[n] = e[n] * hw;
    r.omega_10 = (e[1] - e[0]) * spec.omega;
    r.omega_21 = (e[2] - e[1]) * spec.omega;
    r.anharmonicity = std::abs(1.0 - r.omega_21 / r.omega_10);
    r.strongly_anharmonic = tw > kStrongAnharmonicityThreshold;
    if (r.strongly_anharmonic)
        r.warnings.push_back("PerturbativeRegimeExceeded: tau*omega = " + std::to_string(tw) + " > 1/12");
    return r;
}

AnharmonicityEstimate anharmonicity_engineering(double temperature_K, double f_ghz, double area_um2) {
    if (!(temperature_K > 0.0)) throw NonPositiveTemperature(temperature_K);
    if (!(area_um2 > 0.0)) throw NonPositiveArea(area_um2);
    if (!(f_ghz > 0.0)) throw InvalidArgument("frequency must be positive");
    const double printed = 42.85 * f_ghz / (area_um2 * temperature_K * temperature_K * temperature_K);
    const double tau = nonlinear_tau(units::um2_to_m2(area_um2), temperature_K);
    const double symbolic = 3.0 * tau * units::ghz_to_rad_s(f_ghz);
    return {printed, symbolic, 100.0 * symbolic / printed};
}

PhotonNumberLimit photon_number_limit(double temperature_K, double f_ghz) {
    const double kT = thermal_energy(temperature_K);
    if (!(f_ghz > 0.0)) throw InvalidArgument("frequency must be positive");
    return {41.7 * temperature_K / f_ghz, 2.0 * kT / (K::h * units::ghz_to_hz(f_ghz))};
}

}  // namespace qcap
