#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcap/cli.hpp"
#include "qcap/io.hpp"

using namespace qcap;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = QCAP_SOURCE_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qcap-sim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qcap_io_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

bool close(double a, double b, double rel, double abs) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

// Cell-by-cell numeric comparison against a stored golden CSV.
void compare_with_golden(const std::string& produced, const fs::path& golden, double abs_tol,
                         int skip_column_when_small = -1, int small_re = -1, int small_im = -1) {
    const auto got = parse_csv(produced);
    const auto want = parse_csv(slurp(golden));
    REQUIRE(got.size() == want.size());
    REQUIRE(got[0] == want[0]);
    for (std::size_t r = 1; r < want.size(); ++r) {
        REQUIRE(got[r].size() == want[r].size());
        bool skip_ratio = false;
        if (skip_column_when_small >= 0) {
            const double re = std::stod(want[r][small_re]), im = std::stod(want[r][small_im]);
            skip_ratio = std::hypot(re, im) < 1e-6;
        }
        for (std::size_t c = 0; c < want[r].size(); ++c) {
            if (skip_ratio && static_cast<int>(c) == skip_column_when_small) continue;
            INFO("row " << r << " column " << want[0][c]);
            CHECK(close(std::stod(got[r][c]), std::stod(want[r][c]), 1e-9, abs_tol));
        }
    }
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(io::format_number(1.0) == "1");
    CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(io::format_number(-0.0) == "0");
    CHECK(io::format_number(6.02214076e23) == "6.02214076e+23");
    CHECK(io::format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(io::format_number(std::nan("")) == "nan");
    CHECK(io::number_json(std::nan("")).is_null());
    CHECK(io::number_json(2.0 / 3.0).get<double>() == 0.666666666667);
}

TEST_CASE("strict configuration reader") {
    const io::json j = io::json::parse(R"({"a": 1.5, "b": [1, 2, 3], "c": {"d": true}, "extra": 0})");
    io::ConfigObject root(j, "");
    CHECK(root.number("a") == 1.5);
    CHECK(root.numbers("b", 3).size() == 3);
    CHECK_THROWS_AS(root.numbers("b", 2), ConfigError);
    auto c = root.object("c");
    CHECK(c.boolean_or("d", false));
    CHECK_NOTHROW(c.finish());
    try {
        root.finish();
        FAIL("unknown key accepted");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()) == "/extra: unknown key");
    }
    CHECK_THROWS_AS(io::ConfigObject(io::json::array(), ""), ConfigError);
}

TEST_CASE("help and usage errors") {
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
    CHECK(run_cli({}).code == cli::kExitConfig);
    CHECK(run_cli({"no-such-command"}).code == cli::kExitConfig);
    CHECK(run_cli({"qubit", "--format", "xml"}).code == cli::kExitConfig);
    CHECK(run_cli({"qubit", "--T", "abc"}).code == cli::kExitConfig);
}

TEST_CASE("configuration errors exit 2 with a JSON-pointer path") {
    const auto unknown = write_file("unknown.json", R"({"design": {"thickness_nm": 7, "colour": "blue"}})");
    auto r = run_cli({"sweep-capacitance", "--config", unknown.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("/design/colour: unknown key") != std::string::npos);

    const auto broken = write_file("broken.json", R"({"design": )");
    r = run_cli({"design-check", "--config", broken.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("syntax error") != std::string::npos);

    r = run_cli({"circulator", "--config", scratch("missing.json").string()});
    CHECK(r.code == cli::kExitConfig);

    const auto wrong_type = write_file("wrong_type.json", R"({"temperature_K": "cold"})");
    r = run_cli({"qubit", "--config", wrong_type.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("/temperature_K") != std::string::npos);

    const auto short_phi = write_file("short_phi.json",
                                      R"({"omega_ghz": [1, 1.05, 2.05], "kappa_ghz": [2, 2, 2],
                                          "g_ghz": [1, 1, 1], "phi": [0.5, 0]})");
    r = run_cli({"circulator", "--config", short_phi.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("/phi") != std::string::npos);

    CHECK(run_cli({"design-check", "--thickness-nm", "-3"}).code == cli::kExitConfig);
    CHECK(run_cli({"sweep-capacitance", "--T", "1,-2"}).code == cli::kExitConfig);
    CHECK(run_cli({"coupling", "--f1", "2", "--f2", "0.0005", "--pump-ghz", "1"}).code == cli::kExitConfig);
}

TEST_CASE("numerical contract failures exit 1") {
    const auto r = run_cli({"qubit", "--T", "0.5", "--f", "4"});
    CHECK(r.code == cli::kExitNumerical);
    CHECK(r.err.find("cutoff") != std::string::npos);
    CHECK(run_cli({"qubit", "--T", "0.5", "--f", "4", "--no-spectrum"}).code == cli::kExitOk);
}

TEST_CASE("verify-paper: FLAG rows pass, FAIL rows exit 1") {
    auto r = run_cli({"verify-paper", "--config", (kSource / "configs/paper_table_numbers.json").string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("anharmonicity_1K,%,1.1714,1.714,") != std::string::npos);
    CHECK(r.out.find(",FAIL,") == std::string::npos);
    CHECK(r.out.find(",FLAG,") != std::string::npos);
    CHECK(r.out == run_cli({"verify-paper"}).out);

    const auto regress = write_file(
        "regress.json", R"({"checks": [{"id": "g0_1K", "printed": 30.0, "rel_tol": 0.005}]})");
    r = run_cli({"verify-paper", "--config", regress.string()});
    CHECK(r.code == cli::kExitNumerical);
    CHECK(r.out.find(",FAIL,") != std::string::npos);

    const auto bad_id = write_file("bad_id.json", R"({"checks": [{"id": "nope", "printed": 1, "rel_tol": 0.1}]})");
    r = run_cli({"verify-paper", "--config", bad_id.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find("/checks/0/id") != std::string::npos);
}

TEST_CASE("command-line flags override the configuration") {
    const auto cfg = write_file("qubit.json", R"({"temperature_K": 2.0, "frequency_ghz": 4.0, "spectrum": false})");
    const auto from_cfg = run_cli({"qubit", "--config", cfg.string(), "--format", "json"});
    REQUIRE(from_cfg.code == 0);
    const auto j = io::json::parse(from_cfg.out);
    CHECK(j["temperature_K"].get<double>() == 2.0);
    CHECK_FALSE(j.contains("spectrum"));

    const auto overridden = run_cli({"qubit", "--config", cfg.string(), "--format", "json", "--T", "1"});
    REQUIRE(overridden.code == 0);
    const auto k = io::json::parse(overridden.out);
    CHECK(k["temperature_K"].get<double>() == 1.0);
    CHECK(k["anharmonicity_printed_percent"].get<double>() == 1.714);
}

TEST_CASE("coupling and design-check outputs") {
    auto r = run_cli({"coupling", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = io::json::parse(r.out);
    CHECK(j["kind"] == "Hopping");
    CHECK(j["g0_printed_rad_s"].get<double>() / (2 * std::numbers::pi * 25.55e6) == doctest::Approx(1.0).epsilon(5e-3));

    r = run_cli({"coupling", "--pump-ghz", "6"});
    CHECK(r.out.find("kind,Parametric") != std::string::npos);

    r = run_cli({"design-check", "--thickness-nm", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(io::json::parse(r.out)["thickness_ok"] == false);
}

TEST_CASE("--out writes deterministic data plus a metadata sidecar") {
    const fs::path out = scratch("fig4.csv");
    fs::remove(out);
    fs::remove(out.string() + ".meta.json");
    const auto cfg = (kSource / "configs/paper_fig4.json").string();
    REQUIRE(run_cli({"circulator", "--config", cfg, "--out", out.string()}).code == 0);
    const auto to_stdout = run_cli({"circulator", "--config", cfg});
    CHECK(slurp(out) == to_stdout.out);
    const auto meta = io::json::parse(slurp(out.string() + ".meta.json"));
    CHECK(meta["command"] == "circulator");
    CHECK(meta.contains("generated_unix_s"));
}

TEST_CASE("JSON and CSV carry the same numbers") {
    const auto csv = parse_csv(run_cli({"circulator", "--points", "11"}).out);
    const auto j = io::json::parse(run_cli({"circulator", "--points", "11", "--format", "json"}).out);
    REQUIRE(j.size() + 1 == csv.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        CHECK(j[i]["reS13"].get<double>() == std::stod(csv[i + 1][3]));
        CHECK(j[i]["insertion_loss_dB"].get<double>() == std::stod(csv[i + 1][2]));
    }
}

TEST_CASE("golden: capacitance sweep") {
    const auto r = run_cli({"sweep-capacitance", "--config", (kSource / "configs/paper_fig2.json").string()});
    REQUIRE(r.code == 0);
    compare_with_golden(r.out, kSource / "tests/golden/capacitance_sweep.csv", 1e-15);
}

TEST_CASE("golden: circulator sweep") {
    const auto r = run_cli({"circulator", "--config", (kSource / "configs/paper_fig4.json").string()});
    REQUIRE(r.code == 0);
    // Column 1 is |S13|/|S31|; it is numerical noise wherever S31 vanishes.
    compare_with_golden(r.out, kSource / "tests/golden/circulator_sweep.csv", 1e-10, 1, 5, 6);
}
