#ifndef QCAP_IO_HPP
#define QCAP_IO_HPP

#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qcap/capacitance.hpp"
#include "qcap/circulator.hpp"
#include "qcap/multimode.hpp"
#include "qcap/quantization.hpp"

namespace qcap::io {

using nlohmann::json;

inline constexpr int kSignificantDigits = 12;

/// Fixed 12-significant-digit text ("%.12g"); inf/nan spelled out.
std::string format_number(double v);

/// v rounded to 12 significant digits, for JSON emission. Non-finite -> null.
json number_json(double v);

inline constexpr std::string_view kCapacitanceCsvHeader = "T_K,V_volt,CQ_fF_per_um2,Cseries_fF_per_um2";
inline constexpr std::string_view kCirculatorCsvHeader =
    "delta_rad_s,ratio_13_31,insertion_loss_dB,reS13,imS13,reS31,imS31";

void write_capacitance_csv(std::ostream& os, const std::vector<CapacitanceRow>& rows);
json capacitance_json(const std::vector<CapacitanceRow>& rows);

void write_circulator_csv(std::ostream& os, const SweepResult& sweep);
json circulator_json(const SweepResult& sweep);

json spectrum_json(const SpectrumResult& spectrum);
json coupling_json(const CouplingReport& report);
json design_report_json(const DesignReport& report);

/// Key/value pairs as a two-column CSV ("key,value").
void write_key_value_csv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows);

/// Read-side wrapper over a JSON object that records which keys were used;
/// `finish()` rejects leftovers, naming their JSON-pointer location.
class ConfigObject {
public:
    ConfigObject(const json& node, std::string path);

    bool has(std::string_view key) const;
    double number(std::string_view key);
    double number_or(std::string_view key, double fallback);
    int integer_or(std::string_view key, int fallback);
    bool boolean_or(std::string_view key, bool fallback);
    std::string string_or(std::string_view key, std::string fallback);
    std::vector<double> numbers(std::string_view key, std::size_t expected_size = 0);
    ConfigObject object(std::string_view key);
    std::vector<ConfigObject> objects(std::string_view key);

    const std::string& path() const { return path_; }
    void finish() const;

private:
    const json& get(std::string_view key);
    std::string where(std::string_view key) const;

    const json& node_;
    std::string path_;
    std::set<std::string, std::less<>> used_;
};

/// Parse a JSON file; syntax errors become ConfigError with the byte offset.
json load_json_file(const std::string& path);

CapacitorDesign parse_design(ConfigObject obj);

/// Circulator config in engineering units: GHz (times 2 pi) and phases in units of pi.
CirculatorConfig parse_circulator(ConfigObject& obj);

}  // namespace qcap::io

#endif  // QCAP_IO_HPP
