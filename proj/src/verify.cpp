#include "qcap/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "qcap/capacitance.hpp"
#include "qcap/multimode.hpp"
#include "qcap/quantization.hpp"

namespace qcap {

namespace {

struct Recipe {
    std::string description;
    std::string unit;
    std::function<double()> compute;
};

double g0_printed_hz(double temperature_K) {
    return single_photon_rate_engineering(temperature_K, 4.0, 2.0, 10.0, 100.0).printed / units::kTwoPi;
}

const std::map<std::string, Recipe>& recipes() {
    static const std::map<std::string, Recipe> table = {
        {"geometric_capacitance_7nm",
         {"C_G for eps_r = 4, t = 7 nm", "fF/um^2",
          [] { return units::si_to_ff_per_um2(geometric_capacitance(CapacitorDesign{})); }}},
        {"linear_capacitance_1K_areal",
         {"C_0 per unit area at 1 K", "fF/um^2",
          [] { return units::si_to_ff_per_um2(linear_capacitance_C0(CapacitorDesign{}, 1.0)); }}},
        {"linear_capacitance_1K_100um2",
         {"C_0 total at 1 K, S = 100 um^2", "fF",
          [] {
              const CapacitorDesign d;
              return units::f_to_ff(d.area_S * linear_capacitance_C0(d, 1.0));
          }}},
        {"g0_1K", {"g0/2pi at 1 K (engineering formula)", "MHz", [] { return g0_printed_hz(1.0) / 1e6; }}},
        {"g0_4K", {"g0/2pi at 4 K (engineering formula)", "kHz", [] { return g0_printed_hz(4.0) / 1e3; }}},
        {"g0_0p25K",
         {"g0/2pi at 0.25 K (engineering formula)", "GHz", [] { return g0_printed_hz(0.25) / 1e9; }}},
        {"anharmonicity_0p5K",
         {"A at 0.5 K, 4 GHz, 100 um^2 (42.85 formula)", "%",
          [] { return anharmonicity_engineering(0.5, 4.0, 100.0).printed_percent; }}},
        {"anharmonicity_1K",
         {"A at 1 K, 4 GHz, 100 um^2 (42.85 formula)", "%",
          [] { return anharmonicity_engineering(1.0, 4.0, 100.0).printed_percent; }}},
        {"anharmonicity_12_tau_omega_0p5K",
         {"A = 12 tau omega at 0.5 K, 4 GHz, 100 um^2", "%",
          [] {
              const double tau = nonlinear_tau(units::um2_to_m2(100.0), 0.5);
              return 1200.0 * tau * units::ghz_to_rad_s(4.0);
          }}},
        {"photon_number_limit_constant",
         {"n_max = 2 k_B T / h f at 1 K, 1 GHz", "photons",
          [] { return photon_number_limit(1.0, 1.0).symbolic; }}},
        {"g0_text_definition_factor",
         {"3 gamma_012 / engineering g0 (text defines g0 = 3 gamma_012)", "ratio",
          [] { return single_photon_rate_engineering(1.0, 4.0, 2.0, 10.0, 100.0).ratio; }}},
        {"number_density_series_factor",
         {"printed N-series / (integral of C_Q)/e at 1 K, eV = 0.1 k_B T", "ratio",
          [] {
              const CapacitorDesign d;
              const OperatingPoint op{1.0, 0.1 * PhysicalConstants::k_B / PhysicalConstants::e};
              return printed_number_density_series(d, op) * PhysicalConstants::e / charge_numeric(d, op);
          }}},
    };
    return table;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Flag: return "FLAG";
        case CheckStatus::Fail: return "FAIL";
    }
    return "FAIL";
}

std::vector<std::string> known_check_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, _] : recipes()) ids.push_back(id);
    return ids;
}

std::vector<PublishedNumber> default_published_numbers() {
    return {
        {"geometric_capacitance_7nm", 5.06, 0.005, false},
        {"linear_capacitance_1K_areal", 0.0563, 0.01, false},
        {"linear_capacitance_1K_100um2", 5.63, 0.01, false},
        {"g0_1K", 25.55, 0.005, false},
        {"g0_4K", 399.2, 0.005, false},
        {"g0_0p25K", 1.635, 0.005, false},
        {"anharmonicity_0p5K", 13.71, 0.01, false},
        {"anharmonicity_1K", 1.1714, 0.01, true},
        {"anharmonicity_12_tau_omega_0p5K", 13.71, 0.01, true},
        {"photon_number_limit_constant", 41.7, 0.01, false},
        {"g0_text_definition_factor", 1.0, 0.005, true},
        {"number_density_series_factor", 1.0, 1e-4, true},
    };
}

std::vector<PublishedNumber> parse_published_numbers(io::ConfigObject root) {
    std::vector<PublishedNumber> out;
    for (auto& entry : root.objects("checks")) {
        PublishedNumber p;
        p.id = entry.string_or("id", "");
        if (!recipes().contains(p.id))
            throw ConfigError(entry.path() + "/id: unknown check id '" + p.id + "'");
        p.printed = entry.number("printed");
        p.rel_tol = entry.number("rel_tol");
        if (!(p.rel_tol >= 0.0)) throw ConfigError(entry.path() + "/rel_tol: must be non-negative");
        p.known_inconsistent = entry.boolean_or("known_inconsistent", false);
        entry.finish();
        out.push_back(std::move(p));
    }
    root.finish();
    return out;
}

std::vector<CheckRow> verify_published_numbers(const std::vector<PublishedNumber>& table) {
    std::vector<CheckRow> rows;
    for (const auto& p : table) {
        auto it = recipes().find(p.id);
        if (it == recipes().end()) throw InvalidArgument("unknown check id '" + p.id + "'");
        const double computed = it->second.compute();
        const double dev = std::abs(computed - p.printed) / std::abs(p.printed);
        CheckStatus status = CheckStatus::Pass;
        if (!(dev <= p.rel_tol)) status = p.known_inconsistent ? CheckStatus::Flag : CheckStatus::Fail;
        rows.push_back({p.id, it->second.description, it->second.unit, p.printed, computed, dev, status});
    }
    return rows;
}

}  // namespace qcap
