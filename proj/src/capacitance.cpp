#include "qcap/capacitance.hpp"

#include <cmath>
#include <numbers>

#include "qcap/quadrature.hpp"

namespace qcap {

namespace {

using K = PhysicalConstants;

constexpr double kPi = std::numbers::pi;
const double kLn16 = std::log(16.0);

double hbar_vf_squared(const CapacitorDesign& d) {
    const double hv = K::hbar * d.v_F;
    return hv * hv;
}

}  // namespace

void CapacitorDesign::validate() const {
    if (!(area_S > 0.0)) throw NonPositiveArea(area_S);
    if (!(dielectric_thickness_t > 0.0)) throw NonPositiveThickness(dielectric_thickness_t);
    if (!(relative_permittivity >= 1.0))
        throw InvalidArgument("relative permittivity must be >= 1");
    if (!(v_F > 0.0)) throw InvalidArgument("Fermi velocity must be positive");
}

double log_two_plus_two_cosh(double x) {
    const double ax = std::abs(x);
    return ax + 2.0 * std::log1p(std::exp(-ax));
}

double thermal_capacitance_scale(const CapacitorDesign& design, double temperature_T) {
    const double kT = thermal_energy(temperature_T);
    return 2.0 * K::e * K::e * kT / (kPi * hbar_vf_squared(design));
}

double quantum_capacitance(const CapacitorDesign& design, const OperatingPoint& op) {
    const double kT = thermal_energy(op.temperature_T);
    const double x = fermi_energy(op.voltage_V) / kT;
    return thermal_capacitance_scale(design, op.temperature_T) * log_two_plus_two_cosh(x);
}

double quantum_capacitance_T0(const CapacitorDesign& design, double voltage_V) {
    return K::e * K::e * K::e * std::abs(voltage_V) / (kPi * hbar_vf_squared(design));
}

double geometric_capacitance(const CapacitorDesign& design) {
    if (!(design.dielectric_thickness_t > 0.0))
        throw NonPositiveThickness(design.dielectric_thickness_t);
    return K::epsilon_0 * design.relative_permittivity / design.dielectric_thickness_t;
}

double series_capacitance(const CapacitorDesign& design, const OperatingPoint& op) {
    const double cg = geometric_capacitance(design);
    const double cq = quantum_capacitance(design, op);
    return cg * cq / (cg + cq);
}

ChargeEnergy charge_energy_T0(const CapacitorDesign& design, double voltage_V) {
    const double e3 = K::e * K::e * K::e;
    const double hv2 = hbar_vf_squared(design);
    const double av = std::abs(voltage_V);
    return {e3 * av * voltage_V / (2.0 * kPi * hv2), e3 * av * av * av / (6.0 * kPi * hv2)};
}

ChargeSeriesCoefficients charge_series_coefficients(const CapacitorDesign& design,
                                                    double temperature_T) {
    // ln[2(1+cosh x)] = ln4 + x^2/4 - x^4/96 + ..., x = eV/2k_BT, integrated once in V.
    const double kT = thermal_energy(temperature_T);
    const double scale = thermal_capacitance_scale(design, temperature_T);
    return {scale * std::log(4.0), scale * K::e * K::e / (48.0 * kT * kT)};
}

double charge_series(const CapacitorDesign& design, const OperatingPoint& op) {
    const auto c = charge_series_coefficients(design, op.temperature_T);
    const double v = op.voltage_V;
    return c.linear * v + c.cubic * v * v * v;
}

double printed_number_density_series(const CapacitorDesign& design, const OperatingPoint& op) {
    const double kT = thermal_energy(op.temperature_T);
    const double v = op.voltage_V;
    const double prefactor = 2.0 * K::e * kT / (kPi * hbar_vf_squared(design));
    return prefactor * (std::log(2.0) * v + K::e * K::e * v * v * v / (96.0 * kT * kT));
}

double energy_series(const CapacitorDesign& design, double temperature_T, double number_density_N) {
    const double kT = thermal_energy(temperature_T);
    const double hv = K::hbar * design.v_F;
    const double n2 = number_density_N * number_density_N;
    const double r = hv / (kLn16 * kT);
    const double quartic = (kPi * kPi / 4.0) * r * r * r * r * n2 * n2;
    return (kPi * hv * hv / (2.0 * kT)) * (n2 / kLn16 - quartic);
}

double charge_numeric(const CapacitorDesign& design, const OperatingPoint& op) {
    const double t = op.temperature_T;
    thermal_energy(t);
    auto integrand = [&](double v) { return quantum_capacitance(design, {t, v}); };
    return integrate_adaptive<double>(integrand, 0.0, op.voltage_V, 1e-10).value;
}

double linear_capacitance_C0(const CapacitorDesign& design, double temperature_T) {
    return thermal_capacitance_scale(design, temperature_T) * kLn16;
}

DesignReport design_check(const CapacitorDesign& design, double temperature_T) {
    DesignReport r;
    r.C_G_areal = geometric_capacitance(design);
    r.C_0_areal = linear_capacitance_C0(design, temperature_T);
    r.dominance_ratio = r.C_0_areal / r.C_G_areal;
    const double t = design.dielectric_thickness_t;
    r.thickness_ok = t > kMinThicknessWindow && t < kMaxThicknessWindow;
    r.dominance_ok = r.dominance_ratio <= kDominanceThreshold;

    const double t_nm = units::m_to_nm(t);
    if (t <= kMinThicknessWindow) {
        r.messages.push_back("dielectric thickness " + std::to_string(t_nm) +
                             " nm is at or below the 3 nm tunnelling limit");
    } else if (t >= kMaxThicknessWindow) {
        r.messages.push_back("dielectric thickness " + std::to_string(t_nm) +
                             " nm is at or above the 70 nm limit");
    } else {
        r.messages.push_back("dielectric thickness within 3-70 nm window");
    }
    if (r.dominance_ok) {
        r.messages.push_back("quantum capacitance dominates (C_0/C_G = " +
                             std::to_string(r.dominance_ratio) + ")");
    } else {
        r.messages.push_back("geometric capacitance not an order of magnitude larger (C_0/C_G = " +
                             std::to_string(r.dominance_ratio) + ")");
    }
    return r;
}

std::vector<CapacitanceRow> capacitance_sweep(const CapacitorDesign& design,
                                              std::span<const double> temperatures,
                                              std::span<const double> voltages) {
    const double cg = geometric_capacitance(design);
    std::vector<CapacitanceRow> rows;
    rows.reserve(temperatures.size() * voltages.size());
    for (double t : temperatures) {
        if (t < 0.0) throw NonPositiveTemperature(t);
        for (double v : voltages) {
            const double cq = t == 0.0 ? quantum_capacitance_T0(design, v)
                                       : quantum_capacitance(design, {t, v});
            rows.push_back({t, v, cq, cg * cq / (cg + cq)});
        }
    }
    return rows;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw InvalidArgument("linspace needs at least 2 points");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

}  // namespace qcap
