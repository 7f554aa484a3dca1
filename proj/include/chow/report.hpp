#pragma once

#include <string>
#include <vector>

namespace chow {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchemaVersion = "1";

struct CheckResult {
    std::string id;
    std::string tag;
    std::string description;
    std::string citation;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string schema_version = kReportSchemaVersion;
    std::vector<CheckResult> checks;

    bool overall_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the whole verification registry, or only the checks carrying the
/// given tag.
ReportDocument run_reproduction_checks(const std::string& only_tag = "");

std::vector<std::string> reproduction_tags();

std::string render_report_text(const ReportDocument& doc);
std::string render_report_json(const ReportDocument& doc);

} // namespace chow
