#ifndef RECTADD_REPORT_HPP
#define RECTADD_REPORT_HPP

#include "rectadd/numeric.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace rectadd {

inline constexpr int kReportSchema = 1;
inline constexpr std::size_t kDisplayDigits = 12;

enum class Status { verified, violated, evidence_only };

std::string_view to_string(Status s);

struct Finding {
    std::string claim;
    Status status = Status::evidence_only;
    std::vector<std::string> exact_values;
    std::vector<std::string> approximations;

    /// Records a value both as an exact literal and as a display decimal.
    Finding& value(const QNum& q);
};

/// `verified` when `ok`, `violated` otherwise.
Finding decided(std::string claim, bool ok);
Finding evidence(std::string claim);

struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::vector<Finding> findings;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    /// 0 iff no finding is violated.
    int exit_status() const;
    nlohmann::ordered_json to_json() const;
    /// One line per finding, for terminals.
    std::string summary() const;
};

/// {"exact": literal, "approx": decimal}
nlohmann::ordered_json exact_json(const QNum& q);

}  // namespace rectadd

#endif  // RECTADD_REPORT_HPP
