#include "gpv/claims/report.hpp"

#include <cstdlib>
#include <ctime>

namespace gpv::claims {

namespace {

using nlohmann::json;

std::string escape_markdown_cell(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

}  // namespace

std::string current_timestamp() {
    std::time_t seconds = std::time(nullptr);
    if (const char* fixed = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        const long long parsed = std::strtoll(fixed, &end, 10);
        if (end != fixed && *end == '\0')
            seconds = static_cast<std::time_t>(parsed);
    }
    std::tm utc{};
    gmtime_r(&seconds, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

json report_to_json(const ClaimReport& report) {
    json results = json::array();
    for (const ClaimResult& r : report.results)
        results.push_back({{"id", r.id},
                           {"verdict", verdict_name(r.verdict)},
                           {"mismatch", r.mismatch},
                           {"runtime_ms", r.runtime_ms},
                           {"evidence", r.evidence},
                           {"diagnostics", r.diagnostics}});
    return {{"engine_version", report.engine_version},
            {"timestamp", report.timestamp},
            {"summary",
             {{"total", static_cast<int>(report.results.size())},
              {"pass", report.pass_count},
              {"fail", report.fail_count},
              {"unknown", report.unknown_count}}},
            {"results", std::move(results)}};
}

std::string render_report_json(const ClaimReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_report_markdown(const ClaimReport& report) {
    std::string out = "# Claim verification report\n\n";
    out += "Engine version " + report.engine_version + ". ";
    out += std::to_string(report.results.size()) + " claims: " +
           std::to_string(report.pass_count) + " match the expected verdict, " +
           std::to_string(report.fail_count) + " mismatch, " +
           std::to_string(report.unknown_count) + " undecided.\n\n";
    out += "| Claim | Verdict | Status | Notes |\n";
    out += "| --- | --- | --- | --- |\n";
    for (const ClaimResult& r : report.results) {
        const char* status = r.mismatch ? "MISMATCH"
                             : r.verdict == Verdict::unknown ? "undecided"
                                                             : "ok";
        std::string notes = escape_markdown_cell(r.diagnostics);
        if (notes.empty() && !r.evidence.is_null())
            notes = escape_markdown_cell(r.evidence.dump());
        out += "| " + escape_markdown_cell(r.id) + " | " +
               verdict_name(r.verdict) + " | " + status + " | " + notes +
               " |\n";
    }
    return out;
}

}  // namespace gpv::claims
