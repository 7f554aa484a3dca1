#include "chow/report.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace chow;

TEST_CASE("the verification registry runs green") {
    auto doc = run_reproduction_checks();
    CHECK(doc.checks.size() >= 25);
    for (const auto& c : doc.checks) {
        CAPTURE(c.id);
        CAPTURE(c.computed);
        CHECK(c.pass);
    }
    CHECK(doc.overall_pass());
}

TEST_CASE("tag filtering selects the four degree checks") {
    auto doc = run_reproduction_checks("degrees");
    CHECK(doc.checks.size() == 4);
    for (const auto& c : doc.checks) CHECK(c.tag == "degrees");
}

TEST_CASE("json rendering is deterministic and schema-shaped") {
    auto doc1 = run_reproduction_checks("topology");
    auto doc2 = run_reproduction_checks("topology");
    auto j1 = render_report_json(doc1);
    auto j2 = render_report_json(doc2);
    CHECK(j1 == j2);

    auto parsed = nlohmann::json::parse(j1);
    CHECK(parsed.at("schema_version") == kReportSchemaVersion);
    CHECK(parsed.at("tool_version") == kToolVersion);
    CHECK(parsed.at("overall") == "pass");
    CHECK(parsed.at("checks").is_array());
    for (const auto& c : parsed.at("checks")) {
        CHECK(c.contains("id"));
        CHECK(c.contains("description"));
        CHECK(c.contains("citation"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("status"));
    }
}

TEST_CASE("text rendering has one status line per check") {
    auto doc = run_reproduction_checks("dims");
    auto text = render_report_text(doc);
    std::size_t count = 0, at = 0;
    while ((at = text.find("[PASS]", at)) != std::string::npos) {
        ++count;
        ++at;
    }
    CHECK(count == doc.checks.size());
}
