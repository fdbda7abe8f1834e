#include "qcap/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qcap/io.hpp"
#include "qcap/verify.hpp"

namespace qcap::cli {

namespace {

using io::json;
using io::format_number;

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON configuration file (engineering units)");
    cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

std::optional<json> load_config(const CommonOptions& o) {
    if (o.config_path.empty()) return std::nullopt;
    return io::load_json_file(o.config_path);
}

// Writes the payload to --out (plus a metadata sidecar) or to `out`.
void emit(const CommonOptions& o, const std::string& command, const std::vector<std::string>& args,
          std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (o.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw ConfigError(o.out_path + ": cannot open for writing");
    write(file);
    if (!file) throw ConfigError(o.out_path + ": write failed");

    const auto now = std::chrono::system_clock::now().time_since_epoch();
    json meta = {{"command", command},
                 {"arguments", args},
                 {"format", o.format},
                 {"generated_unix_s", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    std::ofstream side(o.out_path + ".meta.json");
    side << meta.dump(2) << '\n';
}

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct DesignFlags {
    double thickness_nm = 7.0;
    double area_um2 = 100.0;
    double eps = 4.0;
    CLI::Option* thickness = nullptr;
    CLI::Option* area = nullptr;
    CLI::Option* permittivity = nullptr;

    void add(CLI::App* cmd) {
        thickness = cmd->add_option("--thickness-nm", thickness_nm, "Dielectric thickness (nm)");
        area = cmd->add_option("--area-um2", area_um2, "Capacitor area (um^2)");
        permittivity = cmd->add_option("--eps", eps, "Relative permittivity of the dielectric");
    }

    CapacitorDesign apply(CapacitorDesign d) const {
        if (given(thickness)) d.dielectric_thickness_t = units::nm_to_m(thickness_nm);
        if (given(area)) d.area_S = units::um2_to_m2(area_um2);
        if (given(permittivity)) d.relative_permittivity = eps;
        try {
            d.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        return d;
    }
};

CapacitorDesign design_from(io::ConfigObject& root) {
    return root.has("design") ? io::parse_design(root.object("design")) : CapacitorDesign{};
}

void require_positive(double v, const std::string& what) {
    if (!(v > 0.0)) throw ConfigError(what + " must be positive");
}

// --- sweep-capacitance -----------------------------------------------------

struct SweepCapacitanceCmd {
    CommonOptions common;
    DesignFlags design;
    std::vector<double> temperatures{0.25, 1.0, 4.0};
    double v_max = 0.05;
    int points = 201;
    bool no_t0 = false;
    CLI::Option *t_opt, *v_opt, *n_opt, *no_t0_opt;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("sweep-capacitance", "Differential capacitance vs voltage at several temperatures");
        add_common(cmd, common);
        design.add(cmd);
        t_opt = cmd->add_option("--T", temperatures, "Temperatures in K, comma separated")->delimiter(',');
        v_opt = cmd->add_option("--vmax", v_max, "Voltage half-range (V); grid is [-vmax, vmax]");
        n_opt = cmd->add_option("--points", points, "Voltage grid points");
        no_t0_opt = cmd->add_flag("--no-t0", no_t0, "Omit the zero-temperature rows");
        cmd->callback([] {});
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        CapacitorDesign d;
        bool include_t0 = true;
        if (auto cfg = load_config(common)) {
            io::ConfigObject root(*cfg, "");
            d = design_from(root);
            if (root.has("temperatures_K")) temperatures = root.numbers("temperatures_K");
            v_max = root.number_or("v_max_volt", v_max);
            points = root.integer_or("n_points", points);
            include_t0 = root.boolean_or("include_zero_temperature", include_t0);
            root.finish();
        }
        d = design.apply(d);
        if (given(no_t0_opt)) include_t0 = !no_t0;
        (void)t_opt;
        (void)v_opt;
        (void)n_opt;
        for (double t : temperatures) require_positive(t, "temperature");
        require_positive(v_max, "vmax");
        if (points < 2) throw ConfigError("--points must be at least 2");

        std::vector<double> temps;
        if (include_t0) temps.push_back(0.0);
        temps.insert(temps.end(), temperatures.begin(), temperatures.end());
        const auto grid = linspace(-v_max, v_max, points);
        const auto rows = capacitance_sweep(d, temps, grid);
        emit(common, "sweep-capacitance", args, out, [&](std::ostream& os) {
            if (common.format == "json") write_json(os, io::capacitance_json(rows));
            else io::write_capacitance_csv(os, rows);
        });
    }
};

// --- design-check ----------------------------------------------------------

struct DesignCheckCmd {
    CommonOptions common;
    DesignFlags design;
    double temperature = 1.0;
    CLI::Option* t_opt = nullptr;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("design-check", "Dielectric thickness window and C_0/C_G dominance");
        add_common(cmd, common);
        design.add(cmd);
        t_opt = cmd->add_option("--T", temperature, "Temperature (K)");
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        CapacitorDesign d;
        if (auto cfg = load_config(common)) {
            io::ConfigObject root(*cfg, "");
            d = design_from(root);
            if (!given(t_opt)) temperature = root.number_or("temperature_K", temperature);
            else root.number_or("temperature_K", 0.0);
            root.finish();
        }
        d = design.apply(d);
        require_positive(temperature, "temperature");
        const auto report = design_check(d, temperature);
        emit(common, "design-check", args, out, [&](std::ostream& os) {
            if (common.format == "json") {
                write_json(os, io::design_report_json(report));
                return;
            }
            std::vector<std::pair<std::string, std::string>> kv = {
                {"C_G_fF_per_um2", format_number(units::si_to_ff_per_um2(report.C_G_areal))},
                {"C_0_fF_per_um2", format_number(units::si_to_ff_per_um2(report.C_0_areal))},
                {"dominance_ratio", format_number(report.dominance_ratio)},
                {"thickness_ok", report.thickness_ok ? "true" : "false"},
                {"dominance_ok", report.dominance_ok ? "true" : "false"}};
            io::write_key_value_csv(os, kv);
        });
    }
};

// --- qubit -----------------------------------------------------------------

struct QubitCmd {
    CommonOptions common;
    double temperature = 1.0;
    double f_ghz = 4.0;
    double area_um2 = 100.0;
    int cutoff = 80;
    bool no_spectrum = false;
    CLI::Option *t_opt, *f_opt, *s_opt, *c_opt, *ns_opt;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("qubit", "Quantized single-mode oscillator: tau, anharmonicity, Fock spectrum");
        add_common(cmd, common);
        t_opt = cmd->add_option("--T", temperature, "Temperature (K)");
        f_opt = cmd->add_option("--f", f_ghz, "Mode frequency (GHz)");
        s_opt = cmd->add_option("--area-um2", area_um2, "Capacitor area (um^2)");
        c_opt = cmd->add_option("--cutoff", cutoff, "Fock-space cutoff (>= 10)");
        ns_opt = cmd->add_flag("--no-spectrum", no_spectrum, "Skip the exact diagonalization");
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        bool spectrum = true;
        if (auto cfg = load_config(common)) {
            io::ConfigObject root(*cfg, "");
            const double t = root.number_or("temperature_K", temperature);
            const double f = root.number_or("frequency_ghz", f_ghz);
            const double s = root.number_or("area_um2", area_um2);
            const int c = root.integer_or("fock_cutoff", cutoff);
            spectrum = root.boolean_or("spectrum", spectrum);
            root.finish();
            if (!given(t_opt)) temperature = t;
            if (!given(f_opt)) f_ghz = f;
            if (!given(s_opt)) area_um2 = s;
            if (!given(c_opt)) cutoff = c;
        }
        if (given(ns_opt)) spectrum = !no_spectrum;
        require_positive(temperature, "temperature");
        require_positive(f_ghz, "frequency");
        require_positive(area_um2, "area");
        if (cutoff < kMinFockCutoff) throw ConfigError("Fock cutoff must be at least 10");

        CapacitorDesign d;
        d.area_S = units::um2_to_m2(area_um2);
        const double omega = units::ghz_to_rad_s(f_ghz);
        const auto spec = make_oscillator(d, temperature, omega, cutoff);
        const auto amp = photon_amplitude(spec);
        const auto coeff = hamiltonian_coefficients(spec);
        const auto anh = anharmonicity_engineering(temperature, f_ghz, area_um2);
        const auto nmax = photon_number_limit(temperature, f_ghz);
        const double inductance = resonant_inductance(d, temperature, omega);
        std::optional<SpectrumResult> levels;
        if (spectrum) levels = fock_diagonalize(spec);

        emit(common, "qubit", args, out, [&](std::ostream& os) {
            if (common.format == "json") {
                json j = {{"temperature_K", io::number_json(temperature)},
                          {"frequency_ghz", io::number_json(f_ghz)},
                          {"area_um2", io::number_json(area_um2)},
                          {"tau_s", io::number_json(spec.tau)},
                          {"tau_omega", io::number_json(spec.tau_omega())},
                          {"chi", io::number_json(amp.chi)},
                          {"psi_per_m2", io::number_json(amp.psi)},
                          {"inductance_H", io::number_json(inductance)},
                          {"linear_coefficient_J", io::number_json(coeff.linear)},
                          {"quartic_coefficient_J", io::number_json(coeff.quartic)},
                          {"anharmonicity_printed_percent", io::number_json(anh.printed_percent)},
                          {"anharmonicity_symbolic_percent", io::number_json(100.0 * anh.symbolic_fraction)},
                          {"n_max_printed", io::number_json(nmax.printed)},
                          {"n_max_symbolic", io::number_json(nmax.symbolic)},
                          {"strongly_anharmonic", spec.tau_omega() > kStrongAnharmonicityThreshold}};
                if (levels) {
                    j["spectrum"] = io::spectrum_json(*levels);
                    j["warnings"] = levels->warnings;
                }
                write_json(os, j);
                return;
            }
            std::vector<std::pair<std::string, std::string>> kv = {
                {"tau_s", format_number(spec.tau)},
                {"tau_omega", format_number(spec.tau_omega())},
                {"chi", format_number(amp.chi)},
                {"psi_per_m2", format_number(amp.psi)},
                {"inductance_H", format_number(inductance)},
                {"linear_coefficient_J", format_number(coeff.linear)},
                {"quartic_coefficient_J", format_number(coeff.quartic)},
                {"anharmonicity_printed_percent", format_number(anh.printed_percent)},
                {"anharmonicity_symbolic_percent", format_number(100.0 * anh.symbolic_fraction)},
                {"n_max_printed", format_number(nmax.printed)},
                {"n_max_symbolic", format_number(nmax.symbolic)}};
            if (levels) {
                kv.emplace_back("omega10_rad_s", format_number(levels->omega_10));
                kv.emplace_back("omega21_rad_s", format_number(levels->omega_21));
                kv.emplace_back("anharmonicity_fraction", format_number(levels->anharmonicity));
            }
            io::write_key_value_csv(os, kv);
        });
    }
};

// --- coupling --------------------------------------------------------------

struct CouplingCmd {
    CommonOptions common;
    double temperature = 1.0;
    double area_um2 = 100.0;
    double pump_ghz = 4.0;
    double f1_ghz = 2.0;
    double f2_ghz = 10.0;
    double amplitude = 1.0;
    double theta_pi = 0.0;
    double tolerance_mhz = 1.0;
    std::vector<CLI::Option*> opts;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("coupling", "Pump-selected interaction and single-photon rate g0");
        add_common(cmd, common);
        opts = {cmd->add_option("--T", temperature, "Temperature (K)"),
                cmd->add_option("--area-um2", area_um2, "Capacitor area (um^2)"),
                cmd->add_option("--pump-ghz", pump_ghz, "Pump frequency (GHz)"),
                cmd->add_option("--f1", f1_ghz, "Mode 1 frequency (GHz)"),
                cmd->add_option("--f2", f2_ghz, "Mode 2 frequency (GHz)"),
                cmd->add_option("--amplitude", amplitude, "|a_bar|, square root of pump photon number"),
                cmd->add_option("--theta-pi", theta_pi, "Pump phase in units of pi"),
                cmd->add_option("--tolerance-mhz", tolerance_mhz, "Resonance tolerance (MHz)")};
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        if (auto cfg = load_config(common)) {
            io::ConfigObject root(*cfg, "");
            const std::array<std::pair<const char*, double*>, 8> keys = {{{"temperature_K", &temperature},
                                                                          {"area_um2", &area_um2},
                                                                          {"pump_ghz", &pump_ghz},
                                                                          {"f1_ghz", &f1_ghz},
                                                                          {"f2_ghz", &f2_ghz},
                                                                          {"pump_amplitude", &amplitude},
                                                                          {"pump_phase_pi", &theta_pi},
                                                                          {"tolerance_mhz", &tolerance_mhz}}};
            for (std::size_t i = 0; i < keys.size(); ++i) {
                const double v = root.number_or(keys[i].first, *keys[i].second);
                if (!given(opts[i])) *keys[i].second = v;
            }
            root.finish();
        }
        require_positive(temperature, "temperature");
        require_positive(area_um2, "area");
        require_positive(pump_ghz, "pump frequency");
        require_positive(f1_ghz, "mode 1 frequency");
        require_positive(f2_ghz, "mode 2 frequency");
        if (!(amplitude >= 0.0)) throw ConfigError("pump amplitude must be non-negative");
        if (!(tolerance_mhz >= 0.0)) throw ConfigError("tolerance must be non-negative");

        const auto report = coupling_report(temperature, area_um2, pump_ghz, f1_ghz, f2_ghz, amplitude,
                                            units::pi_units_to_rad(theta_pi),
                                            units::kTwoPi * tolerance_mhz * 1e6);
        emit(common, "coupling", args, out, [&](std::ostream& os) {
            if (common.format == "json") {
                write_json(os, io::coupling_json(report));
                return;
            }
            const auto& c = report.classification;
            io::write_key_value_csv(os, {{"kind", std::string(to_string(c.kind))},
                                         {"detuning_rad_s", format_number(c.detuning)},
                                         {"G_rad_s", format_number(c.G)},
                                         {"theta_rad", format_number(c.theta)},
                                         {"g0_printed_rad_s", format_number(report.g0.printed)},
                                         {"g0_symbolic_rad_s", format_number(report.g0.symbolic)}});
        });
    }
};

// --- circulator ------------------------------------------------------------

struct CirculatorCmd {
    CommonOptions common;
    double delta_phi_pi = 0.5;
    double dmin_ghz = -3.0;
    double dmax_ghz = 3.0;
    int points = 1001;
    std::string frame = "rotating";
    CLI::Option *phi_opt, *dmin_opt, *dmax_opt, *n_opt, *frame_opt;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("circulator", "Three-mode circulator scattering sweep");
        add_common(cmd, common);
        phi_opt = cmd->add_option("--delta-phi-pi", delta_phi_pi, "Gauge flux in units of pi (carried by phi_1)");
        dmin_opt = cmd->add_option("--dmin-ghz", dmin_ghz, "Sweep start, delta/2pi in GHz");
        dmax_opt = cmd->add_option("--dmax-ghz", dmax_ghz, "Sweep end, delta/2pi in GHz");
        n_opt = cmd->add_option("--points", points, "Sweep points (>= 2)");
        frame_opt = cmd->add_option("--frame", frame, "rotating or lab")->check(CLI::IsMember({"rotating", "lab"}));
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        CirculatorConfig config = reference_circulator(units::pi_units_to_rad(delta_phi_pi));
        if (auto cfg = load_config(common)) {
            io::ConfigObject root(*cfg, "");
            config = io::parse_circulator(root);
            if (root.has("sweep")) {
                auto s = root.object("sweep");
                const double lo = s.number_or("delta_min_ghz", dmin_ghz);
                const double hi = s.number_or("delta_max_ghz", dmax_ghz);
                const int n = s.integer_or("n_points", points);
                s.finish();
                if (!given(dmin_opt)) dmin_ghz = lo;
                if (!given(dmax_opt)) dmax_ghz = hi;
                if (!given(n_opt)) points = n;
            }
            root.finish();
        }
        if (given(phi_opt)) config.phi = {units::pi_units_to_rad(delta_phi_pi), 0.0, 0.0};
        if (given(frame_opt)) config.frame = frame == "lab" ? Frame::LabFrame : Frame::RotatingFrame;
        if (points < 2) throw ConfigError("--points must be at least 2");
        if (!(dmax_ghz > dmin_ghz)) throw ConfigError("sweep end must exceed sweep start");

        const auto result = sweep(config, units::ghz_to_rad_s(dmin_ghz), units::ghz_to_rad_s(dmax_ghz), points);
        emit(common, "circulator", args, out, [&](std::ostream& os) {
            if (common.format == "json") write_json(os, io::circulator_json(result));
            else io::write_circulator_csv(os, result);
        });
    }
};

// --- verify-paper ----------------------------------------------------------

struct VerifyCmd {
    CommonOptions common;
    bool any_fail = false;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify-paper", "Recompute every published number; PASS / FLAG / FAIL");
        add_common(cmd, common);
    }

    void run(const std::vector<std::string>& args, std::ostream& out) {
        auto table = default_published_numbers();
        if (auto cfg = load_config(common)) table = parse_published_numbers(io::ConfigObject(*cfg, ""));
        const auto rows = verify_published_numbers(table);
        for (const auto& r : rows) any_fail = any_fail || r.status == CheckStatus::Fail;
        emit(common, "verify-paper", args, out, [&](std::ostream& os) {
            if (common.format == "json") {
                json j = json::array();
                for (const auto& r : rows) {
                    j.push_back({{"id", r.id},
                                 {"description", r.description},
                                 {"unit", r.unit},
                                 {"printed", io::number_json(r.printed)},
                                 {"computed", io::number_json(r.computed)},
                                 {"rel_deviation", io::number_json(r.rel_deviation)},
                                 {"status", std::string(to_string(r.status))}});
                }
                write_json(os, j);
                return;
            }
            os << "id,unit,printed,computed,rel_deviation,status,description\n";
            for (const auto& r : rows) {
                os << r.id << ',' << r.unit << ',' << format_number(r.printed) << ',' << format_number(r.computed)
                   << ',' << format_number(r.rel_deviation) << ',' << to_string(r.status) << ",\""
                   << r.description << "\"\n";
            }
        });
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphene quantum-capacitor simulation toolkit", "qcap-sim"};
    app.require_subcommand(1, 1);

    SweepCapacitanceCmd sweep_cmd;
    DesignCheckCmd design_cmd;
    QubitCmd qubit_cmd;
    CouplingCmd coupling_cmd;
    CirculatorCmd circulator_cmd;
    VerifyCmd verify_cmd;
    sweep_cmd.add(app);
    design_cmd.add(app);
    qubit_cmd.add(app);
    coupling_cmd.add(app);
    circulator_cmd.add(app);
    verify_cmd.add(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "sweep-capacitance") sweep_cmd.run(args, out);
        else if (command == "design-check") design_cmd.run(args, out);
        else if (command == "qubit") qubit_cmd.run(args, out);
        else if (command == "coupling") coupling_cmd.run(args, out);
        else if (command == "circulator") circulator_cmd.run(args, out);
        else if (command == "verify-paper") {
            verify_cmd.run(args, out);
            if (verify_cmd.any_fail) {
                err << "verify-paper: at least one published number regressed (FAIL)\n";
                return kExitNumerical;
            }
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        err << "numerical contract failed: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace qcap::cli
