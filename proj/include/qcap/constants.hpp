#ifndef QCAP_CONSTANTS_HPP
#define QCAP_CONSTANTS_HPP

#include <numbers>

#include "qcap/errors.hpp"

namespace qcap {

// CODATA 2018. Everything in the library is SI; engineering units only
// appear through the helpers in `units` below.
struct PhysicalConstants {
    static constexpr double e = 1.602176634e-19;        // C
    static constexpr double k_B = 1.380649e-23;         // J/K
    static constexpr double h = 6.62607015e-34;         // J s
    static constexpr double hbar = h / (2.0 * std::numbers::pi);
    static constexpr double c = 299792458.0;            // m/s
    static constexpr double epsilon_0 = 8.8541878128e-12;  // F/m
    // Graphene Fermi velocity, fixed at c/300.
    static constexpr double v_F_default = c / 300.0;
};

namespace units {

constexpr double kGiga = 1e9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// frequency: GHz <-> angular rad/s
constexpr double ghz_to_rad_s(double f_ghz) { return kTwoPi * f_ghz * kGiga; }
constexpr double rad_s_to_ghz(double omega) { return omega / (kTwoPi * kGiga); }
constexpr double ghz_to_hz(double f_ghz) { return f_ghz * kGiga; }
constexpr double hz_to_ghz(double f_hz) { return f_hz / kGiga; }

// area: um^2 <-> m^2
constexpr double um2_to_m2(double s) { return s * 1e-12; }
constexpr double m2_to_um2(double s) { return s * 1e12; }

// length: nm <-> m
constexpr double nm_to_m(double t) { return t * 1e-9; }
constexpr double m_to_nm(double t) { return t * 1e9; }

// areal capacitance: fF/um^2 <-> F/m^2  (1 fF/um^2 = 1e-3 F/m^2)
constexpr double ff_per_um2_to_si(double c) { return c * 1e-3; }
constexpr double si_to_ff_per_um2(double c) { return c * 1e3; }

// capacitance: fF <-> F
constexpr double ff_to_f(double c) { return c * 1e-15; }
constexpr double f_to_ff(double c) { return c * 1e15; }

// phase: units of pi <-> rad
constexpr double pi_units_to_rad(double p) { return p * std::numbers::pi; }
constexpr double rad_to_pi_units(double p) { return p / std::numbers::pi; }

}  // namespace units

/// Fermi energy at either electrode, E_F = eV/2 (odd in V).
constexpr double fermi_energy(double volts) {
    return PhysicalConstants::e * volts / 2.0;
}

inline double thermal_energy(double kelvin) {
    if (!(kelvin > 0.0)) throw NonPositiveTemperature(kelvin);
    return PhysicalConstants::k_B * kelvin;
}

}  // namespace qcap

#endif  // QCAP_CONSTANTS_HPP
