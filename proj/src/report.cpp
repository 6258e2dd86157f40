#include "exactla/report.hpp"

#include "exactla/error.hpp"

namespace exactla {

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json j;
    j["identity"] = report.identity;
    j["passed"] = report.passed();
    j["hypothesis_met"] = report.hypothesis_met();
    j["residual"] = report.residual;
    j["inputs"] = report.inputs;
    if (!report.note.empty())
        j["note"] = report.note;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
    try {
        VerificationReport r;
        r.identity = j.at("identity").get<std::string>();
        bool passed = j.at("passed").get<bool>();
        bool met = j.value("hypothesis_met", true);
        r.outcome = !met ? Outcome::hypothesis_not_met : (passed ? Outcome::passed : Outcome::failed);
        r.residual = j.value("residual", nlohmann::json());
        r.inputs = j.value("inputs", nlohmann::json::object());
        r.note = j.value("note", std::string());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports)
{
    SuiteSummary s;
    for (const auto& r : reports) {
        switch (r.outcome) {
        case Outcome::passed:
            ++s.passed;
            break;
        case Outcome::failed:
            ++s.failed;
            break;
        case Outcome::hypothesis_not_met:
            ++s.hypothesis_not_met;
            break;
        }
    }
    return s;
}

std::string summary_line(const SuiteSummary& s)
{
    return "summary: " + std::to_string(s.total()) + " checks, " + std::to_string(s.passed) + " passed, " +
           std::to_string(s.failed) + " failed, " + std::to_string(s.hypothesis_not_met) +
           " hypothesis not met";
}

} // namespace exactla
