#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gpv::claims {

// Closed vocabulary of claim checkers. Each kind names a decision procedure
// with typed parameters; external claim files may only use these kinds.
enum class CheckerKind {
    winner_is,                          // {spaces, winner}
    strategy_wins,                      // {max_odd}
    claim_is_false_with_counterexample, // {winner, parity, max_n}
    polygon_count_is,                   // {sides, count}
    all_polygons_satisfy,               // {sides, property[, count]}
    exists_polygon_satisfying,          // {sides, property}
    all_polygons_tile,                  // {sides, max_dim}
    winner_table_is,                    // {winners}
    nim_equivalence,                    // {max_n}
    right_angle_count_is,               // {steps, convex}
};

std::string checker_kind_name(CheckerKind kind);
std::optional<CheckerKind> checker_kind_from_name(const std::string& name);

enum class Verdict { yes, no, unknown };

std::string verdict_name(Verdict v);

struct Claim {
    std::string id;
    std::string source;     // who asserted it (speaker or surrounding text)
    std::string statement;  // human-readable form of the assertion
    CheckerKind checker = CheckerKind::winner_is;
    nlohmann::json parameters;  // checker-specific, validated on load
    bool expected_verdict = true;
};

struct ClaimResult {
    std::string id;
    Verdict verdict = Verdict::unknown;
    nlohmann::json evidence;   // witness/counterexample payload
    std::string diagnostics;   // non-empty only for unknown verdicts
    double runtime_ms = 0.0;
    bool mismatch = false;     // decided verdict contradicts the expectation
};

struct ClaimReport {
    std::string engine_version;
    std::string timestamp;  // ISO-8601 UTC; SOURCE_DATE_EPOCH overrides clock
    std::vector<ClaimResult> results;  // claim-id order, every claim once
    int pass_count = 0;
    int fail_count = 0;     // mismatches
    int unknown_count = 0;
};

// The fixed registry transcribing the assertions under test: five about the
// row game (ids GAME-*) and ten about the polygon family (ids POLY-*).
std::vector<Claim> builtin_claims();

// Parses a JSON array of claim objects. Throws std::invalid_argument with
// a position for malformed JSON, an unknown checker kind, a bad
// expected_verdict, or parameters that do not type-check.
std::vector<Claim> load_claims(const std::string& file_content);

// Inverse of load_claims; load_claims(serialize_claims(cs)) == cs.
std::string serialize_claims(const std::vector<Claim>& claims);

// Evaluates every claim against the engines. Checker runtime errors become
// unknown verdicts carrying diagnostics; results are ordered by claim id.
ClaimReport run_claims(const std::vector<Claim>& claims);

bool operator==(const Claim& a, const Claim& b);

}  // namespace gpv::claims
