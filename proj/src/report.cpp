#include "rectadd/report.hpp"

#include <algorithm>

namespace rectadd {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::verified: return "verified";
        case Status::violated: return "violated";
        case Status::evidence_only: return "evidence-only";
    }
    return "unknown";
}

Finding& Finding::value(const QNum& q) {
    exact_values.push_back(q.to_string());
    approximations.push_back(approximate(q, kDisplayDigits));
    return *this;
}

Finding decided(std::string claim, bool ok) {
    return Finding{std::move(claim), ok ? Status::verified : Status::violated, {}, {}};
}

Finding evidence(std::string claim) { return Finding{std::move(claim), Status::evidence_only, {}, {}}; }

int Report::exit_status() const {
    const bool bad =
        std::any_of(findings.begin(), findings.end(), [](const Finding& f) { return f.status == Status::violated; });
    return bad ? 1 : 0;
}

nlohmann::ordered_json exact_json(const QNum& q) {
    return {{"exact", q.to_string()}, {"approx", approximate(q, kDisplayDigits)}};
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json out;
    out["schema"] = kReportSchema;
    out["command"] = command;
    out["inputs"] = inputs;
    auto& list = out["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
        list.push_back({{"claim", f.claim},
                        {"status", std::string(to_string(f.status))},
                        {"exact_values", f.exact_values},
                        {"approximations", f.approximations}});
    }
    out["data"] = data;
    out["exit_status"] = exit_status();
    return out;
}

std::string Report::summary() const {
    std::string out;
    for (const auto& f : findings) {
        out += "[";
        out += to_string(f.status);
        out += "] ";
        out += f.claim;
        if (!f.approximations.empty()) {
            out += "  (";
            for (std::size_t i = 0; i < f.approximations.size() && i < 4; ++i) {
                if (i) out += ", ";
                out += f.approximations[i];
            }
            if (f.approximations.size() > 4) out += ", ...";
            out += ")";
        }
        out += "\n";
    }
    return out;
}

}  // namespace rectadd
