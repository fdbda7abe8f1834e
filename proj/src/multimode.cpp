#include "qcap/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qcap/errors.hpp"
#include "qcap/quantization.hpp"

namespace qcap {

using K = PhysicalConstants;

void ModeSet::validate() const {
    if (labels.size() != frequencies.size())
        throw InvalidArgument("mode set: one label per frequency required");
    for (double w : frequencies)
        if (!(w > 0.0)) throw InvalidArgument("mode frequencies must be positive");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw InvalidArgument("mode labels must be unique");
}

std::string_view to_string(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::Hopping: return "Hopping";
        case InteractionKind::Parametric: return "Parametric";
        case InteractionKind::OffResonant: return "OffResonant";
    }
    return "OffResonant";
}

double gamma_nml(double tau, double omega_n, double omega_m, double omega_l) {
    return tau * omega_n * std::sqrt(omega_m * omega_l);
}

InteractionClassification classify_interaction(const PumpSpec& pump, double omega_1, double omega_2,
                                               double tau, double tolerance) {
    if (!(tolerance >= 0.0)) throw InvalidArgument("resonance tolerance must be non-negative");
    if (!(pump.Omega > 0.0)) throw InvalidArgument("pump frequency must be positive");
    if (!(pump.amplitude_abs >= 0.0)) throw InvalidArgument("pump amplitude must be non-negative");
    if (!(omega_1 > 0.0 && omega_2 > 0.0)) throw InvalidArgument("mode frequencies must be positive");

    const double two_omega = 2.0 * pump.Omega;
    const double hop = std::abs(two_omega - std::abs(omega_1 - omega_2));
    const double par = std::abs(two_omega - (omega_1 + omega_2));
    const bool is_hop = hop <= tolerance;
    const bool is_par = par <= tolerance;
    if (is_hop && is_par)
        throw AmbiguousResonance("pump matches both the difference and the sum resonance");

    InteractionClassification c;
    c.G = 3.0 * gamma_nml(tau, pump.Omega, omega_1, omega_2) * pump.amplitude_abs * pump.amplitude_abs;
    c.theta = pump.phase_theta;
    if (is_hop) {
        c.kind = InteractionKind::Hopping;
        c.detuning = hop;
    } else if (is_par) {
        c.kind = InteractionKind::Parametric;
        c.detuning = par;
    } else {
        c.kind = InteractionKind::OffResonant;
        c.detuning = std::min(hop, par);
    }
    return c;
}

SinglePhotonRate single_photon_rate_engineering(double temperature_K, double f_ghz, double f1_ghz,
                                                double f2_ghz, double area_um2) {
    if (!(temperature_K > 0.0)) throw NonPositiveTemperature(temperature_K);
    if (!(area_um2 > 0.0)) throw NonPositiveArea(area_um2);
    if (!(f_ghz > 0.0 && f1_ghz > 0.0 && f2_ghz > 0.0))
        throw InvalidArgument("frequencies must be positive");
    const double t3 = temperature_K * temperature_K * temperature_K;
    const double printed_ghz = 0.143 * f_ghz * std::sqrt(f1_ghz * f2_ghz) / (area_um2 * t3);
    const double printed = units::kTwoPi * printed_ghz * units::kGiga;

    const double tau = nonlinear_tau(units::um2_to_m2(area_um2), temperature_K);
    const double symbolic = 3.0 * gamma_nml(tau, units::ghz_to_rad_s(f_ghz), units::ghz_to_rad_s(f1_ghz),
                                            units::ghz_to_rad_s(f2_ghz));
    return {printed, symbolic, symbolic / printed};
}

CouplingReport coupling_report(double temperature_K, double area_um2, double f_ghz, double f1_ghz,
                               double f2_ghz, double amplitude_abs, double phase_theta,
                               double tolerance) {
    const double tau = nonlinear_tau(units::um2_to_m2(area_um2), temperature_K);
    const PumpSpec pump{units::ghz_to_rad_s(f_ghz), amplitude_abs, phase_theta};
    return {classify_interaction(pump, units::ghz_to_rad_s(f1_ghz), units::ghz_to_rad_s(f2_ghz), tau,
                                 tolerance),
            single_photon_rate_engineering(temperature_K, f_ghz, f1_ghz, f2_ghz, area_um2)};
}

double quantum_conductance() {
    return 2.0 * K::e * K::e / (std::numbers::pi * K::hbar);
}

double quantum_rc_time(double area_S, double fermi_energy_J, double v_F) {
    if (!(area_S > 0.0)) throw NonPositiveArea(area_S);
    return area_S * std::abs(fermi_energy_J) / (K::hbar * v_F * v_F);
}

}  // namespace qcap
