#pragma once

#include <string>

#include "json.hpp"

#include "gpv/claims/claims.hpp"

namespace gpv::claims {

// ISO-8601 UTC timestamp. Reads SOURCE_DATE_EPOCH (seconds) when set so
// reports can be byte-reproducible; otherwise uses the current clock.
std::string current_timestamp();

// Stable JSON form: engine_version, timestamp, summary counts, and one
// result object per claim (id, verdict, mismatch, runtime_ms, evidence,
// diagnostics). Only runtime_ms varies between runs of the same inputs.
nlohmann::json report_to_json(const ClaimReport& report);
std::string render_report_json(const ClaimReport& report);

// Human-oriented table. Omits timestamps and runtimes so the text depends
// only on the verdicts.
std::string render_report_markdown(const ClaimReport& report);

}  // namespace gpv::claims
