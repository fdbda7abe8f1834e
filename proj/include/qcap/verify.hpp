#ifndef QCAP_VERIFY_HPP
#define QCAP_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qcap/io.hpp"

namespace qcap {

// PASS: recomputed value within tolerance of the published one.
// FLAG: the reference value is known to be inconsistent with its own formula; a mismatch is expected.
// FAIL: regression.
enum class CheckStatus { Pass, Flag, Fail };

std::string_view to_string(CheckStatus s);

struct PublishedNumber {
    std::string id;
    double printed;
    double rel_tol;
    bool known_inconsistent = false;
};

struct CheckRow {
    std::string id;
    std::string description;
    std::string unit;
    double printed;
    double computed;
    double rel_deviation;
    CheckStatus status;
};

/// Every id the checker knows how to recompute.
std::vector<std::string> known_check_ids();

/// Built-in table of published numbers (mirrors configs/paper_table_numbers.json).
std::vector<PublishedNumber> default_published_numbers();

std::vector<PublishedNumber> parse_published_numbers(io::ConfigObject root);

std::vector<CheckRow> verify_published_numbers(const std::vector<PublishedNumber>& table);

}  // namespace qcap

#endif  // QCAP_VERIFY_HPP
