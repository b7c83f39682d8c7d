#include "affineorth/report_json.hpp"

#include <cstdio>
#include <sstream>

#include "affineorth/errors.hpp"

namespace affineorth {

namespace {

// Shortest representation that parses back to the same double, so text and
// JSON agree bitwise.
std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

} // namespace

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json entry{{"name", c.name},
                             {"residual", c.residual},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return nlohmann::json{{"scenario", report.scenario},
                          {"parameters", report.parameters},
                          {"seed", report.seed},
                          {"checks", std::move(checks)},
                          {"overall", report.overall},
                          {"runtime_ms", report.runtime_ms}};
}

void validate_report_schema(const nlohmann::json& doc) {
    auto require = [&doc](const char* key, bool ok) {
        if (!ok)
            throw PreconditionError(std::string("report schema: bad or missing field '") +
                                    key + "'");
    };
    require("scenario", doc.contains("scenario") && doc["scenario"].is_string());
    require("parameters", doc.contains("parameters") && doc["parameters"].is_object());
    require("seed", doc.contains("seed") && doc["seed"].is_number());
    require("overall", doc.contains("overall") && doc["overall"].is_boolean());
    require("runtime_ms", doc.contains("runtime_ms") && doc["runtime_ms"].is_number());
    require("checks", doc.contains("checks") && doc["checks"].is_array());
    for (const auto& c : doc["checks"]) {
        require("checks[].name", c.contains("name") && c["name"].is_string());
        require("checks[].residual", c.contains("residual") && c["residual"].is_number());
        require("checks[].tolerance", c.contains("tolerance") && c["tolerance"].is_number());
        require("checks[].passed", c.contains("passed") && c["passed"].is_boolean());
    }
}

VerificationReport report_from_json(const nlohmann::json& doc) {
    validate_report_schema(doc);
    VerificationReport report;
    report.scenario = doc["scenario"].get<std::string>();
    report.parameters = doc["parameters"].get<std::map<std::string, std::string>>();
    report.seed = doc["seed"].get<std::uint64_t>();
    report.overall = doc["overall"].get<bool>();
    report.runtime_ms = doc["runtime_ms"].get<double>();
    for (const auto& c : doc["checks"]) {
        CheckResult check;
        check.name = c["name"].get<std::string>();
        check.residual = c["residual"].get<double>();
        check.tolerance = c["tolerance"].get<double>();
        check.passed = c["passed"].get<bool>();
        if (c.contains("detail"))
            check.detail = c["detail"].get<std::string>();
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "scenario: " << report.scenario << "\n";
    os << "seed: " << report.seed << "\n";
    os << "parameters:\n";
    for (const auto& [key, value] : report.parameters)
        os << "  " << key << " = " << value << "\n";
    os << "checks:\n";
    for (const CheckResult& c : report.checks) {
        os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
           << "  residual=" << full_precision(c.residual)
           << "  tolerance=" << full_precision(c.tolerance);
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    os << "runtime_ms: " << full_precision(report.runtime_ms) << "\n";
    return os.str();
}

} // namespace affineorth
