#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lring {

// Structured pass/fail record for one verification check. A failing check
// always carries a witness (the inputs and both sides).
struct VerificationReport {
    std::string check;
    std::string params;
    bool pass = false;
    std::string witness;

    nlohmann::json to_json() const {
        nlohmann::json j{{"check", check}, {"params", params}, {"status", pass ? "pass" : "fail"}};
        if (!pass) j["witness"] = witness;
        return j;
    }
};

inline VerificationReport report_pass(std::string check, std::string params) {
    return {std::move(check), std::move(params), true, ""};
}

inline VerificationReport report_fail(std::string check, std::string params, std::string witness) {
    return {std::move(check), std::move(params), false, std::move(witness)};
}

// Canonical merge order, independent of execution order.
inline void sort_reports(std::vector<VerificationReport>& reports) {
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.params < b.params;
    });
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace lring
