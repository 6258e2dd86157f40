#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace exactla {

enum class Outcome {
    passed,
    failed,
    /// The identity's hypothesis does not hold for these inputs; nothing was checked.
    hypothesis_not_met,
};

/// Result of checking one identity on one set of inputs.
///
/// residual is the serialized difference lhs - rhs of the first failing
/// part (or of the first part when everything passed, in which case it is
/// a zero); it is null when the hypothesis was not met.
struct VerificationReport {
    std::string identity;
    Outcome outcome = Outcome::passed;
    nlohmann::json residual;
    nlohmann::json inputs = nlohmann::json::object();
    std::string note;

    bool passed() const { return outcome == Outcome::passed; }
    bool hypothesis_met() const { return outcome != Outcome::hypothesis_not_met; }
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t hypothesis_not_met = 0;

    std::size_t total() const { return passed + failed + hypothesis_not_met; }
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);
std::string summary_line(const SuiteSummary& s);

} // namespace exactla
