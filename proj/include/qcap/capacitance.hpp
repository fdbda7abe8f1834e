#ifndef QCAP_CAPACITANCE_HPP
#define QCAP_CAPACITANCE_HPP

#include <span>
#include <string>
#include <vector>

#include "qcap/constants.hpp"

namespace qcap {

// Graphene / dielectric / graphene stack. SI throughout.
struct CapacitorDesign {
    double area_S = units::um2_to_m2(100.0);            // m^2
    double dielectric_thickness_t = units::nm_to_m(7.0);  // m
    double relative_permittivity = 4.0;
    double v_F = PhysicalConstants::v_F_default;          // m/s

    // Throws DomainError on a non-physical design.
    void validate() const;
};

struct OperatingPoint {
    double temperature_T;  // K
    double voltage_V;      // V across the quantum capacitance
};

struct DesignReport {
    double C_G_areal;   // F/m^2
    double C_0_areal;   // F/m^2
    double dominance_ratio;
    bool thickness_ok;
    bool dominance_ok;
    std::vector<std::string> messages;
};

struct ChargeEnergy {
    double charge;  // C/m^2
    double energy;  // J/m^2
};

// Coefficients of Q(V) ~ linear*V + cubic*V^3 around V = 0.
struct ChargeSeriesCoefficients {
    double linear;  // F/m^2
    double cubic;   // F/(m^2 V^2)
};

struct CapacitanceRow {
    double temperature_T;
    double voltage_V;
    double C_Q;       // F/m^2
    double C_series;  // F/m^2
};

inline constexpr double kMinThicknessWindow = 3e-9;
inline constexpr double kMaxThicknessWindow = 70e-9;
inline constexpr double kDominanceThreshold = 0.1;

/// ln[2(1 + cosh x)] evaluated as |x| + 2 log1p(exp(-|x|)); finite for any x.
double log_two_plus_two_cosh(double x);

/// Prefactor 2 e^2 k_B T / (pi (hbar v_F)^2), shared by every finite-T formula.
double thermal_capacitance_scale(const CapacitorDesign& design, double temperature_T);

double quantum_capacitance(const CapacitorDesign& design, const OperatingPoint& op);
double quantum_capacitance_T0(const CapacitorDesign& design, double voltage_V);
double geometric_capacitance(const CapacitorDesign& design);
double series_capacitance(const CapacitorDesign& design, const OperatingPoint& op);

/// Zero-temperature charge and stored energy per unit area.
ChargeEnergy charge_energy_T0(const CapacitorDesign& design, double voltage_V);

/// Low-voltage series of Q(V) = integral of C_Q, valid for e|V| <~ 0.2 k_B T.
ChargeSeriesCoefficients charge_series_coefficients(const CapacitorDesign& design, double temperature_T);
double charge_series(const CapacitorDesign& design, const OperatingPoint& op);

/// Number-density series with the coefficients exactly as printed in the
/// source derivation (ln 2 and 1/96). Exactly half of charge_series / e.
double printed_number_density_series(const CapacitorDesign& design, const OperatingPoint& op);

/// Stored energy per unit area as a quartic series in the number density N (1/m^2).
double energy_series(const CapacitorDesign& design, double temperature_T, double number_density_N);

/// Q(V) = integral_0^V C_Q dV' by adaptive Gauss-Kronrod at 1e-10 relative.
double charge_numeric(const CapacitorDesign& design, const OperatingPoint& op);

/// Linear capacitance per unit area C_0 = 2 e^2 k_B T ln16 / pi (hbar v_F)^2.
double linear_capacitance_C0(const CapacitorDesign& design, double temperature_T);

DesignReport design_check(const CapacitorDesign& design, double temperature_T);

/// Rows (T, V, C_Q, C_series) over the grid. T == 0 selects the zero-temperature branch.
std::vector<CapacitanceRow> capacitance_sweep(const CapacitorDesign& design,
                                              std::span<const double> temperatures,
                                              std::span<const double> voltages);

/// n evenly spaced points on [lo, hi]; n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace qcap

#endif  // QCAP_CAPACITANCE_HPP
