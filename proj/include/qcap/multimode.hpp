#ifndef QCAP_MULTIMODE_HPP
#define QCAP_MULTIMODE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qcap/constants.hpp"

namespace qcap {

struct ModeSet {
    std::vector<double> frequencies;  // rad/s
    std::vector<std::string> labels;

    void validate() const;
};

struct PumpSpec {
    double Omega;          // rad/s
    double amplitude_abs;  // |a_bar|, sqrt of pump photon number
    double phase_theta;    // rad
};

enum class InteractionKind { Hopping, Parametric, OffResonant };

std::string_view to_string(InteractionKind kind);

struct InteractionClassification {
    InteractionKind kind;
    double detuning;  // rad/s, residual of the matched (or closest) resonance
    double G;         // rad/s, 3 gamma_012 |a_bar|^2
    double theta;     // rad
};

struct SinglePhotonRate {
    double printed;   // rad/s, 2 pi 0.143 f sqrt(f1 f2) / (S T^3) GHz
    double symbolic;  // rad/s, 3 gamma_012
    double ratio;     // symbolic / printed
};

// Pump classification result plus both single-photon rates.
struct CouplingReport {
    InteractionClassification classification;
    SinglePhotonRate g0;
};

inline constexpr double kDefaultResonanceTolerance = units::kTwoPi * 1e6;

/// gamma_nml = tau omega_n sqrt(omega_m omega_l).
double gamma_nml(double tau, double omega_n, double omega_m, double omega_l);

InteractionClassification classify_interaction(const PumpSpec& pump, double omega_1, double omega_2,
                                               double tau,
                                               double tolerance = kDefaultResonanceTolerance);

SinglePhotonRate single_photon_rate_engineering(double temperature_K, double f_ghz, double f1_ghz,
                                                double f2_ghz, double area_um2);

CouplingReport coupling_report(double temperature_K, double area_um2, double f_ghz, double f1_ghz,
                               double f2_ghz, double amplitude_abs, double phase_theta,
                               double tolerance = kDefaultResonanceTolerance);

/// sigma_Q = 2 e^2 / (pi hbar).
double quantum_conductance();

/// tau_Q = S |E_F| / (hbar v_F^2).
double quantum_rc_time(double area_S, double fermi_energy_J, double v_F = PhysicalConstants::v_F_default);

}  // namespace qcap

#endif  // QCAP_MULTIMODE_HPP
