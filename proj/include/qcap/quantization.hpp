#ifndef QCAP_QUANTIZATION_HPP
#define QCAP_QUANTIZATION_HPP

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcap/capacitance.hpp"

namespace qcap {

// A single quantized mode of the quantum-capacitor / inductor tank.
struct OscillatorSpec {
    double omega;          // rad/s
    double tau;            // s, nonlinear time constant
    double area_S;         // m^2
    double temperature_T;  // K
    int fock_cutoff = 80;
    double v_F = PhysicalConstants::v_F_default;

    double tau_omega() const { return tau * omega; }
};

// Above this tau*omega the quartic term is no longer a small correction.
inline constexpr double kStrongAnharmonicityThreshold = 1.0 / 12.0;
inline constexpr int kMinFockCutoff = 10;
inline constexpr int kConvergenceCutoffStep = 20;
inline constexpr double kConvergenceTolerance = 1e-9;

struct PhotonAmplitude {
    double chi;  // (1/m^2) s^(1/2)
    double psi;  // 1/m^2
};

struct HamiltonianCoefficients {
    double linear;   // J, hbar*omega
    double quartic;  // J, multiplies -(a + a^dag)^4
};

struct SpectrumResult {
    std::vector<double> eigenvalues;  // J, ascending, whole truncated basis
    std::array<double, 3> levels;     // J, the bound states continuing |0>, |1>, |2>
    double omega_10;                  // rad/s
    double omega_21;                  // rad/s
    double anharmonicity;             // dimensionless fraction
    bool strongly_anharmonic = false;
    std::vector<std::string> warnings;
};

struct AnharmonicityEstimate {
    double printed_percent;      // 42.85 f / (S T^3)
    double symbolic_fraction;    // 3 tau omega
    double ratio;                // symbolic percent / printed percent
};

struct PhotonNumberLimit {
    double printed;   // 41.7 T / f
    double symbolic;  // 2 k_B T / (h f)
};

/// Build a spec from a capacitor design; tau follows from area and temperature.
OscillatorSpec make_oscillator(const CapacitorDesign& design, double temperature_T, double omega,
                               int fock_cutoff = 80);

void validate(const OscillatorSpec& spec);

PhotonAmplitude photon_amplitude(const OscillatorSpec& spec);

/// tau = pi hbar^3 v_F^2 / (8 ln^2(16) S (k_B T)^3).
double nonlinear_tau(double area_S, double temperature_T, double v_F = PhysicalConstants::v_F_default);

/// Same constant through chi: pi^3 S hbar^5 v_F^6 chi^4 / (2 ln^4(16) (k_B T)^5).
double nonlinear_tau_via_chi(double area_S, double temperature_T, double chi,
                             double v_F = PhysicalConstants::v_F_default);

/// L such that omega = 1 / sqrt(S L C_0).
double resonant_inductance(const CapacitorDesign& design, double temperature_T, double omega);

HamiltonianCoefficients hamiltonian_coefficients(const OscillatorSpec& spec);

/// Dimensionless (units of hbar*omega) truncated Hamiltonian
/// (n + 1/2) - (tau*omega/4) (a + a^dag)^4 on `cutoff` Fock states.
Eigen::MatrixXd fock_hamiltonian(int cutoff, double tau_omega);

/// First-order level n in units of hbar*omega.
double first_order_level(int n, double tau_omega);

/// Exact diagonalization in the truncated Fock basis.
///
/// The quartic term is unbounded below, so a large basis also holds
/// spurious states localised at the truncation edge, deep below the
/// physical ground state. The three physical levels are therefore taken
/// as the eigenvalues closest to their first-order estimates
/// (n + 1/2) - (tau omega / 4)(6n^2 + 6n + 3), and each must move by less
/// than 1e-9 (relative) when the cutoff grows by 20.
SpectrumResult fock_diagonalize(const OscillatorSpec& spec);

AnharmonicityEstimate anharmonicity_engineering(double temperature_K, double f_ghz, double area_um2);

PhotonNumberLimit photon_number_limit(double temperature_K, double f_ghz);

}  // namespace qcap

#endif  // QCAP_QUANTIZATION_HPP
