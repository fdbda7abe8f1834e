#include "qcap/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qcap::io {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v);
    return buf;
}

json number_json(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format_number(v).c_str(), nullptr);
}

void write_capacitance_csv(std::ostream& os, const std::vector<CapacitanceRow>& rows) {
    os << kCapacitanceCsvHeader << '\n';
    for (const auto& r : rows) {
        os << format_number(r.temperature_T) << ',' << format_number(r.voltage_V) << ','
           << format_number(units::si_to_ff_per_um2(r.C_Q)) << ','
           << format_number(units::si_to_ff_per_um2(r.C_series)) << '\n';
    }
}

json capacitance_json(const std::vector<CapacitanceRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"T_K", number_json(r.temperature_T)},
                       {"V_volt", number_json(r.voltage_V)},
                       {"CQ_fF_per_um2", number_json(units::si_to_ff_per_um2(r.C_Q))},
                       {"Cseries_fF_per_um2", number_json(units::si_to_ff_per_um2(r.C_series))}});
    }
    return out;
}

void write_circulator_csv(std::ostream& os, const SweepResult& sweep) {
    os << kCirculatorCsvHeader << '\n';
    for (std::size_t i = 0; i < sweep.detuning_grid.size(); ++i) {
        const auto s13 = conversion(sweep.S_of_delta[i], 1, 3);
        const auto s31 = conversion(sweep.S_of_delta[i], 3, 1);
        os << format_number(sweep.detuning_grid[i]) << ',' << format_number(sweep.ratio_13_31[i]) << ','
           << format_number(sweep.insertion_loss_dB[i]) << ',' << format_number(s13.real()) << ','
           << format_number(s13.imag()) << ',' << format_number(s31.real()) << ','
           << format_number(s31.imag()) << '\n';
    }
}

json circulator_json(const SweepResult& sweep) {
    json out = json::array();
    for (std::size_t i = 0; i < sweep.detuning_grid.size(); ++i) {
        const auto s13 = conversion(sweep.S_of_delta[i], 1, 3);
        const auto s31 = conversion(sweep.S_of_delta[i], 3, 1);
        out.push_back({{"delta_rad_s", number_json(sweep.detuning_grid[i])},
                       {"ratio_13_31", number_json(sweep.ratio_13_31[i])},
                       {"insertion_loss_dB", number_json(sweep.insertion_loss_dB[i])},
                       {"reS13", number_json(s13.real())},
                       {"imS13", number_json(s13.imag())},
                       {"reS31", number_json(s31.real())},
                       {"imS31", number_json(s31.imag())}});
    }
    return out;
}

json spectrum_json(const SpectrumResult& spectrum) {
    json levels = json::array();
    for (double e : spectrum.eigenvalues) levels.push_back(number_json(e));
    json bound = json::array();
    for (double e : spectrum.levels) bound.push_back(number_json(e));
    return {{"eigenvalues_J", levels},
            {"levels_J", bound},
            {"omega10_rad_s", number_json(spectrum.omega_10)},
            {"omega21_rad_s", number_json(spectrum.omega_21)},
            {"anharmonicity_fraction", number_json(spectrum.anharmonicity)}};
}

json coupling_json(const CouplingReport& report) {
    const auto& c = report.classification;
    return {{"kind", std::string(to_string(c.kind))},
            {"detuning_rad_s", number_json(c.detuning)},
            {"G_rad_s", number_json(c.G)},
            {"theta_rad", number_json(c.theta)},
            {"g0_printed_rad_s", number_json(report.g0.printed)},
            {"g0_symbolic_rad_s", number_json(report.g0.symbolic)}};
}

json design_report_json(const DesignReport& report) {
    return {{"C_G_fF_per_um2", number_json(units::si_to_ff_per_um2(report.C_G_areal))},
            {"C_0_fF_per_um2", number_json(units::si_to_ff_per_um2(report.C_0_areal))},
            {"dominance_ratio", number_json(report.dominance_ratio)},
            {"thickness_ok", report.thickness_ok},
            {"dominance_ok", report.dominance_ok},
            {"messages", report.messages}};
}

void write_key_value_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
}

// ---------------------------------------------------------------------------

ConfigObject::ConfigObject(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object())
        throw ConfigError((path_.empty() ? std::string("/") : path_) + ": expected a JSON object");
}

std::string ConfigObject::where(std::string_view key) const {
    return path_ + "/" + std::string(key);
}

bool ConfigObject::has(std::string_view key) const {
    return node_.contains(std::string(key));
}

const json& ConfigObject::get(std::string_view key) {
    auto it = node_.find(std::string(key));
    if (it == node_.end()) throw ConfigError(where(key) + ": required key missing");
    used_.emplace(key);
    return *it;
}

double ConfigObject::number(std::string_view key) {
    const json& v = get(key);
    if (!v.is_number()) throw ConfigError(where(key) + ": expected a number");
    return v.get<double>();
}

double ConfigObject::number_or(std::string_view key, double fallback) {
    return has(key) ? number(key) : fallback;
}

int ConfigObject::integer_or(std::string_view key, int fallback) {
    if (!has(key)) return fallback;
    const json& v = get(key);
    if (!v.is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
    return v.get<int>();
}

bool ConfigObject::boolean_or(std::string_view key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = get(key);
    if (!v.is_boolean()) throw ConfigError(where(key) + ": expected true or false");
    return v.get<bool>();
}

std::string ConfigObject::string_or(std::string_view key, std::string fallback) {
    if (!has(key)) return fallback;
    const json& v = get(key);
    if (!v.is_string()) throw ConfigError(where(key) + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> ConfigObject::numbers(std::string_view key, std::size_t expected_size) {
    const json& v = get(key);
    if (!v.is_array()) throw ConfigError(where(key) + ": expected an array of numbers");
    if (expected_size != 0 && v.size() != expected_size)
        throw ConfigError(where(key) + ": expected " + std::to_string(expected_size) + " entries, got " +
                          std::to_string(v.size()));
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) throw ConfigError(where(key) + "/" + std::to_string(i) + ": expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

ConfigObject ConfigObject::object(std::string_view key) {
    const json& v = get(key);
    if (!v.is_object()) throw ConfigError(where(key) + ": expected an object");
    return ConfigObject(v, where(key));
}

std::vector<ConfigObject> ConfigObject::objects(std::string_view key) {
    const json& v = get(key);
    if (!v.is_array()) throw ConfigError(where(key) + ": expected an array of objects");
    std::vector<ConfigObject> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_object()) throw ConfigError(where(key) + "/" + std::to_string(i) + ": expected an object");
        out.emplace_back(v[i], where(key) + "/" + std::to_string(i));
    }
    return out;
}

void ConfigObject::finish() const {
    for (const auto& item : node_.items()) {
        if (!used_.contains(item.key()))
            throw ConfigError(where(item.key()) + ": unknown key");
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

CapacitorDesign parse_design(ConfigObject obj) {
    CapacitorDesign d;
    d.area_S = units::um2_to_m2(obj.number_or("area_um2", units::m2_to_um2(d.area_S)));
    d.dielectric_thickness_t = units::nm_to_m(obj.number_or("thickness_nm", units::m_to_nm(d.dielectric_thickness_t)));
    d.relative_permittivity = obj.number_or("relative_permittivity", d.relative_permittivity);
    d.v_F = obj.number_or("v_F_m_per_s", d.v_F);
    obj.finish();
    try {
        d.validate();
    } catch (const DomainError& e) {
        throw ConfigError(obj.path() + ": " + e.what());
    }
    return d;
}

CirculatorConfig parse_circulator(ConfigObject& obj) {
    auto take3 = [&](std::string_view key, double scale) {
        const auto v = obj.numbers(key, 3);
        return std::array<double, 3>{v[0] * scale, v[1] * scale, v[2] * scale};
    };
    const double ghz = units::ghz_to_rad_s(1.0);
    CirculatorConfig c;
    c.omega = take3("omega_ghz", ghz);
    c.kappa = take3("kappa_ghz", ghz);
    c.g = take3("g_ghz", ghz);
    c.phi = take3("phi", std::numbers::pi);
    if (obj.has("rotating_detuning_ghz")) c.rotating_detuning = take3("rotating_detuning_ghz", ghz);
    const std::string frame = obj.string_or("frame", "rotating");
    if (frame == "rotating") {
        c.frame = Frame::RotatingFrame;
    } else if (frame == "lab") {
        c.frame = Frame::LabFrame;
    } else {
        throw ConfigError(obj.path() + "/frame: expected \"rotating\" or \"lab\"");
    }
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw ConfigError(obj.path() + ": " + e.what());
    }
    return c;
}

}  // namespace qcap::io
