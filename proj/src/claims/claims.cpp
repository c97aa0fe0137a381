#include "gpv/claims/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "gpv/claims/report.hpp"
#include "gpv/game/board.hpp"
#include "gpv/game/grundy.hpp"
#include "gpv/game/strategy.hpp"
#include "gpv/poly/enumerate.hpp"
#include "gpv/poly/polygon.hpp"
#include "gpv/poly/symmetry.hpp"
#include "gpv/tiling/certificate.hpp"
#include "gpv/version.hpp"

namespace gpv::claims {

namespace {

using nlohmann::json;

struct KindName {
    CheckerKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {CheckerKind::winner_is, "winner_is"},
    {CheckerKind::strategy_wins, "strategy_wins"},
    {CheckerKind::claim_is_false_with_counterexample,
     "claim_is_false_with_counterexample"},
    {CheckerKind::polygon_count_is, "polygon_count_is"},
    {CheckerKind::all_polygons_satisfy, "all_polygons_satisfy"},
    {CheckerKind::exists_polygon_satisfying, "exists_polygon_satisfying"},
    {CheckerKind::all_polygons_tile, "all_polygons_tile"},
    {CheckerKind::winner_table_is, "winner_table_is"},
    {CheckerKind::nim_equivalence, "nim_equivalence"},
    {CheckerKind::right_angle_count_is, "right_angle_count_is"},
};

const char* const kProperties[] = {
    "convex",          "symmetric",           "convex_turn_then_reflex",
    "cells_match_area", "convex_corner_count", "trivial_symmetry",
};

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument(message);
}

long long require_int(const json& params, const std::string& claim_id,
                      const char* key, long long min_value) {
    if (!params.contains(key) || !params[key].is_number_integer())
        fail("claim " + claim_id + ": parameter '" + key +
             "' must be an integer");
    const long long value = params[key].get<long long>();
    if (value < min_value)
        fail("claim " + claim_id + ": parameter '" + key + "' must be >= " +
             std::to_string(min_value));
    return value;
}

std::string require_string(const json& params, const std::string& claim_id,
                           const char* key) {
    if (!params.contains(key) || !params[key].is_string())
        fail("claim " + claim_id + ": parameter '" + key +
             "' must be a string");
    return params[key].get<std::string>();
}

std::string require_player(const json& params, const std::string& claim_id,
                           const char* key) {
    const std::string value = require_string(params, claim_id, key);
    if (value != "A" && value != "B")
        fail("claim " + claim_id + ": parameter '" + key +
             "' must be \"A\" or \"B\"");
    return value;
}

void validate_parameters(const Claim& claim) {
    const json& p = claim.parameters;
    if (!p.is_object())
        fail("claim " + claim.id + ": parameters must be an object");
    switch (claim.checker) {
        case CheckerKind::winner_is:
            require_int(p, claim.id, "spaces", 0);
            require_player(p, claim.id, "winner");
            break;
        case CheckerKind::strategy_wins:
            require_int(p, claim.id, "max_odd", 1);
            break;
        case CheckerKind::claim_is_false_with_counterexample: {
            require_player(p, claim.id, "winner");
            const std::string parity = require_string(p, claim.id, "parity");
            if (parity != "even" && parity != "odd")
                fail("claim " + claim.id +
                     ": parameter 'parity' must be \"even\" or \"odd\"");
            require_int(p, claim.id, "max_n", 1);
            break;
        }
        case CheckerKind::polygon_count_is:
            require_int(p, claim.id, "sides", 1);
            require_int(p, claim.id, "count", 0);
            break;
        case CheckerKind::all_polygons_satisfy:
        case CheckerKind::exists_polygon_satisfying: {
            require_int(p, claim.id, "sides", 1);
            const std::string property =
                require_string(p, claim.id, "property");
            if (std::find_if(std::begin(kProperties), std::end(kProperties),
                             [&](const char* name) {
                                 return property == name;
                             }) == std::end(kProperties))
                fail("claim " + claim.id + ": unknown property '" + property +
                     "'");
            if (property == std::string("convex_corner_count"))
                require_int(p, claim.id, "count", 0);
            break;
        }
        case CheckerKind::all_polygons_tile:
            require_int(p, claim.id, "sides", 1);
            require_int(p, claim.id, "max_dim", 1);
            break;
        case CheckerKind::winner_table_is: {
            if (!p.contains("winners") || !p["winners"].is_array() ||
                p["winners"].empty())
                fail("claim " + claim.id +
                     ": parameter 'winners' must be a non-empty array");
            for (const json& w : p["winners"])
                if (!w.is_string() ||
                    (w.get<std::string>() != "A" && w.get<std::string>() != "B"))
                    fail("claim " + claim.id +
                         ": 'winners' entries must be \"A\" or \"B\"");
            break;
        }
        case CheckerKind::nim_equivalence:
            require_int(p, claim.id, "max_n", 0);
            break;
        case CheckerKind::right_angle_count_is:
            require_string(p, claim.id, "steps");
            require_int(p, claim.id, "convex", 0);
            break;
    }
}

// Engine state shared across checkers within one run.
struct Context {
    game::GrundyTable table;
    std::unordered_map<int, std::vector<poly::Polygon>> families;

    const std::vector<poly::Polygon>& family(int sides) {
        auto it = families.find(sides);
        if (it == families.end())
            it = families.emplace(sides, poly::enumerate_polygons(sides)).first;
        return it->second;
    }
};

bool polygon_has_property(const poly::Polygon& p, const std::string& property,
                          const json& params) {
    if (property == "convex") return p.is_convex();
    if (property == "symmetric")
        return poly::symmetry_class(p) != poly::SymmetryClass::trivial;
    if (property == "trivial_symmetry")
        return poly::symmetry_class(p) == poly::SymmetryClass::trivial;
    if (property == "convex_turn_then_reflex") return p.every_l_followed_by_r();
    if (property == "cells_match_area")
        return static_cast<long long>(p.cells().size()) == p.area();
    if (property == "convex_corner_count")
        return p.corner_counts().convex == params["count"].get<long long>();
    throw std::logic_error("unchecked property name: " + property);
}

// Pure win/loss minimax of "row board + Nim heap", no Grundy shortcuts:
// used to confirm the heap of size g[n] neutralizes the row exactly.
bool compound_mover_wins(const game::Board& board, int heap,
                         std::unordered_map<std::uint64_t, bool>& memo) {
    const std::uint64_t key = (board.mask() << 8) | static_cast<unsigned>(heap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool wins = false;
    for (int cell : board.legal_moves())
        if (!compound_mover_wins(board.after(cell), heap, memo)) {
            wins = true;
            break;
        }
    for (int take = 1; !wins && take <= heap; ++take)
        if (!compound_mover_wins(board, heap - take, memo)) wins = true;
    memo.emplace(key, wins);
    return wins;
}

struct Outcome {
    Verdict verdict = Verdict::unknown;
    json evidence;
    std::string diagnostics;
};

Outcome check_winner_is(const json& p, Context& ctx) {
    const int spaces = p["spaces"].get<int>();
    const game::Player computed = game::winner(spaces, ctx.table);
    const std::string computed_name(1, game::player_char(computed));
    Outcome out;
    out.verdict = computed_name == p["winner"].get<std::string>()
                      ? Verdict::yes
                      : Verdict::no;
    out.evidence = {{"spaces", spaces},
                    {"winner", computed_name},
                    {"grundy", game::grundy_free_row(spaces, ctx.table)}};
    return out;
}

Outcome check_strategy_wins(const json& p) {
    const int max_odd = p["max_odd"].get<int>();
    int verified = 0;
    for (int n = 1; n <= max_odd; n += 2) {
        if (!game::verify_strategy(game::mirror_strategy(n), n,
                                   game::Mover::first)) {
            return {Verdict::no, {{"failing_length", n}}, ""};
        }
        ++verified;
    }
    return {Verdict::yes, {{"max_odd", max_odd}, {"verified_lengths", verified}},
            ""};
}

Outcome check_claim_false(const json& p, Context& ctx) {
    const std::string asserted = p["winner"].get<std::string>();
    const bool even = p["parity"].get<std::string>() == "even";
    const int max_n = p["max_n"].get<int>();
    for (int n = even ? 2 : 1; n <= max_n; n += 2) {
        const game::Player computed = game::winner(n, ctx.table);
        const std::string name(1, game::player_char(computed));
        if (name == asserted) continue;
        json evidence = {{"counterexample_n", n}, {"winner", name}};
        if (auto move = game::optimal_move(game::Board(n), ctx.table)) {
            const game::Board after = game::Board(n).after(*move);
            evidence["first_move"] = *move;
            evidence["board_after"] = after.occupied();
            evidence["legal_replies"] = after.legal_moves();
        }
        return {Verdict::no, std::move(evidence), ""};
    }
    return {Verdict::yes, {{"checked_up_to", max_n}}, ""};
}

Outcome check_polygon_count(const json& p, Context& ctx) {
    const int sides = p["sides"].get<int>();
    const auto count = static_cast<long long>(ctx.family(sides).size());
    Outcome out;
    out.verdict =
        count == p["count"].get<long long>() ? Verdict::yes : Verdict::no;
    out.evidence = {{"count", count}};
    return out;
}

Outcome check_all_satisfy(const json& p, Context& ctx) {
    const std::string property = p["property"].get<std::string>();
    int checked = 0;
    for (const poly::Polygon& member : ctx.family(p["sides"].get<int>())) {
        if (!polygon_has_property(member, property, p))
            return {Verdict::no, {{"counterexample", member.turns()}}, ""};
        ++checked;
    }
    return {Verdict::yes, {{"checked", checked}}, ""};
}

Outcome check_exists(const json& p, Context& ctx) {
    const std::string property = p["property"].get<std::string>();
    int checked = 0;
    for (const poly::Polygon& member : ctx.family(p["sides"].get<int>())) {
        if (polygon_has_property(member, property, p))
            return {Verdict::yes, {{"witness", member.turns()}}, ""};
        ++checked;
    }
    return {Verdict::no, {{"checked", checked}}, ""};
}

Outcome check_all_tile(const json& p, Context& ctx) {
    const int max_dim = p["max_dim"].get<int>();
    json certificates = json::array();
    std::string unresolved;
    for (const poly::Polygon& member : ctx.family(p["sides"].get<int>())) {
        const auto cert = tiling::tile_any(member, max_dim);
        if (!cert || !tiling::verify_certificate(member, *cert)) {
            if (!unresolved.empty()) unresolved += ", ";
            unresolved += member.turns();
            continue;
        }
        certificates.push_back({{"polygon", member.turns()},
                                {"kind", tiling::certificate_kind(*cert)}});
    }
    if (!unresolved.empty())
        // No certificate within bounds proves nothing either way.
        return {Verdict::unknown, std::move(certificates),
                "no certificate within bounds for: " + unresolved};
    return {Verdict::yes, std::move(certificates), ""};
}

Outcome check_winner_table(const json& p, Context& ctx) {
    std::string expected, computed;
    const json& winners = p["winners"];
    for (std::size_t i = 0; i < winners.size(); ++i) {
        expected += winners[i].get<std::string>();
        computed += game::player_char(
            game::winner(static_cast<int>(i) + 1, ctx.table));
    }
    Outcome out;
    out.verdict = computed == expected ? Verdict::yes : Verdict::no;
    out.evidence = {{"computed", computed}};
    return out;
}

Outcome check_nim_equivalence(const json& p, Context& ctx) {
    const int max_n = p["max_n"].get<int>();
    std::unordered_map<std::uint64_t, bool> memo;
    for (int n = 0; n <= max_n; ++n) {
        memo.clear();
        const int heap = game::nim_heap_equivalent(n, ctx.table);
        if (compound_mover_wins(game::Board(n), heap, memo))
            return {Verdict::no, {{"failing_length", n}, {"heap", heap}}, ""};
    }
    return {Verdict::yes, {{"checked_up_to", max_n}}, ""};
}

Outcome check_right_angles(const json& p) {
    const poly::CornerCounts counts =
        poly::general_right_angle_count(p["steps"].get<std::string>());
    Outcome out;
    out.verdict = counts.convex == p["convex"].get<long long>() ? Verdict::yes
                                                                : Verdict::no;
    out.evidence = {{"convex", counts.convex}, {"reflex", counts.reflex}};
    return out;
}

Outcome evaluate(const Claim& claim, Context& ctx) {
    const json& p = claim.parameters;
    switch (claim.checker) {
        case CheckerKind::winner_is: return check_winner_is(p, ctx);
        case CheckerKind::strategy_wins: return check_strategy_wins(p);
        case CheckerKind::claim_is_false_with_counterexample:
            return check_claim_false(p, ctx);
        case CheckerKind::polygon_count_is: return check_polygon_count(p, ctx);
        case CheckerKind::all_polygons_satisfy: return check_all_satisfy(p, ctx);
        case CheckerKind::exists_polygon_satisfying: return check_exists(p, ctx);
        case CheckerKind::all_polygons_tile: return check_all_tile(p, ctx);
        case CheckerKind::winner_table_is: return check_winner_table(p, ctx);
        case CheckerKind::nim_equivalence: return check_nim_equivalence(p, ctx);
        case CheckerKind::right_angle_count_is: return check_right_angles(p);
    }
    throw std::logic_error("unhandled checker kind");
}

// "GAME-2" sorts before "GAME-10": compare the alphabetic prefix, then the
// numeric suffix, then the full id.
std::tuple<std::string, long long, std::string> id_sort_key(
    const std::string& id) {
    std::size_t digits = 0;
    while (digits < id.size() &&
           std::isdigit(static_cast<unsigned char>(id[id.size() - 1 - digits])))
        ++digits;
    long long number = -1;
    if (digits > 0 && digits <= 18)
        number = std::stoll(id.substr(id.size() - digits));
    return {id.substr(0, id.size() - digits), number, id};
}

Claim make_claim(std::string id, std::string source, std::string statement,
                 CheckerKind checker, json parameters, bool expected) {
    Claim claim;
    claim.id = std::move(id);
    claim.source = std::move(source);
    claim.statement = std::move(statement);
    claim.checker = checker;
    claim.parameters = std::move(parameters);
    claim.expected_verdict = expected;
    return claim;
}

}  // namespace

std::string checker_kind_name(CheckerKind kind) {
    for (const KindName& entry : kKindNames)
        if (entry.kind == kind) return entry.name;
    throw std::logic_error("unnamed checker kind");
}

std::optional<CheckerKind> checker_kind_from_name(const std::string& name) {
    for (const KindName& entry : kKindNames)
        if (name == entry.name) return entry.kind;
    return std::nullopt;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        case Verdict::unknown: return "unknown";
    }
    throw std::logic_error("unnamed verdict");
}

bool operator==(const Claim& a, const Claim& b) {
    return a.id == b.id && a.source == b.source && a.statement == b.statement &&
           a.checker == b.checker && a.parameters == b.parameters &&
           a.expected_verdict == b.expected_verdict;
}

std::vector<Claim> builtin_claims() {
    std::vector<Claim> claims;
    claims.push_back(make_claim(
        "GAME-1", "Claude 3",
        "Player A wins the 7-space row under optimal play.",
        CheckerKind::winner_is, {{"spaces", 7}, {"winner", "A"}}, true));
    claims.push_back(make_claim(
        "GAME-2", "Claude 3",
        "Opening in the centre and mirroring every reply wins for the first "
        "player on every odd row length up to 25.",
        CheckerKind::strategy_wins, {{"max_odd", 25}}, true));
    claims.push_back(make_claim(
        "GAME-3", "Claude 3",
        "Player B wins every even row length up to 12.",
        CheckerKind::claim_is_false_with_counterexample,
        {{"winner", "B"}, {"parity", "even"}, {"max_n", 12}}, false));
    claims.push_back(make_claim(
        "GAME-4", "Authors' case analysis",
        "Row lengths 1 through 7 are won by A, A, A, B, A, A, A.",
        CheckerKind::winner_table_is,
        {{"winners", {"A", "A", "A", "B", "A", "A", "A"}}}, true));
    claims.push_back(make_claim(
        "GAME-5", "ChatGPT-3.5-Turbo",
        "The row game is equivalent to a version of Nim: adding a Nim heap "
        "of the row's Grundy value makes a second-player win, for rows up "
        "to 12.",
        CheckerKind::nim_equivalence, {{"max_n", 12}}, true));
    claims.push_back(make_claim(
        "POLY-1", "Authors",
        "Exactly 7 polygons (up to rotation, reflection, and translation) "
        "have 24 equal sides and only 90- or 270-degree angles.",
        CheckerKind::polygon_count_is, {{"sides", 24}, {"count", 7}}, true));
    claims.push_back(make_claim(
        "POLY-2", "Claude 3",
        "Every family member has an even number of 90-degree angles (in "
        "fact exactly 14).",
        CheckerKind::all_polygons_satisfy,
        {{"sides", 24}, {"property", "convex_corner_count"}, {"count", 14}},
        true));
    claims.push_back(make_claim(
        "POLY-3", "Claude 3 and Bing Copilot",
        "Every family member tiles the plane.", CheckerKind::all_polygons_tile,
        {{"sides", 24}, {"max_dim", 12}}, true));
    claims.push_back(make_claim(
        "POLY-4", "Claude 3", "Every family member is symmetric.",
        CheckerKind::all_polygons_satisfy,
        {{"sides", 24}, {"property", "symmetric"}}, false));
    claims.push_back(make_claim(
        "POLY-5", "Claude 3",
        "Every 90-degree angle is immediately followed by a 270-degree "
        "angle.",
        CheckerKind::all_polygons_satisfy,
        {{"sides", 24}, {"property", "convex_turn_then_reflex"}}, false));
    claims.push_back(make_claim(
        "POLY-6", "Claude 3", "Every family member is convex.",
        CheckerKind::all_polygons_satisfy,
        {{"sides", 24}, {"property", "convex"}}, false));
    claims.push_back(make_claim(
        "POLY-7", "Claude 3",
        "Every family member decomposes into unit squares, one per unit of "
        "area.",
        CheckerKind::all_polygons_satisfy,
        {{"sides", 24}, {"property", "cells_match_area"}}, true));
    claims.push_back(make_claim(
        "POLY-8", "Claude 3", "Exactly 2 polygons exist in the family.",
        CheckerKind::polygon_count_is, {{"sides", 24}, {"count", 2}}, false));
    claims.push_back(make_claim(
        "POLY-9", "Authors",
        "Some family member has no symmetry at all.",
        CheckerKind::exists_polygon_satisfying,
        {{"sides", 24}, {"property", "trivial_symmetry"}}, true));
    claims.push_back(make_claim(
        "POLY-10", "Authors",
        "A polyomino boundary can have exactly 5 right angles, so the "
        "even-count property does not extend to all polyominoes.",
        CheckerKind::right_angle_count_is,
        {{"steps", "EENNWNWSSS"}, {"convex", 5}}, true));
    for (const Claim& claim : claims) validate_parameters(claim);
    return claims;
}

std::vector<Claim> load_claims(const std::string& file_content) {
    json doc;
    try {
        doc = json::parse(file_content);
    } catch (const json::parse_error& e) {
        fail("claims file is not valid JSON (byte " + std::to_string(e.byte) +
             "): " + e.what());
    }
    if (!doc.is_array()) fail("claims file must be a JSON array");
    std::vector<Claim> claims;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& entry = doc[i];
        const std::string where = "claims[" + std::to_string(i) + "]";
        if (!entry.is_object()) fail(where + " must be an object");
        for (const char* key : {"id", "source", "statement", "checker"})
            if (!entry.contains(key) || !entry[key].is_string())
                fail(where + " needs a string field '" + key + "'");
        Claim claim;
        claim.id = entry["id"].get<std::string>();
        claim.source = entry["source"].get<std::string>();
        claim.statement = entry["statement"].get<std::string>();
        const std::string kind = entry["checker"].get<std::string>();
        const auto checker = checker_kind_from_name(kind);
        if (!checker) fail(where + ": unknown checker kind '" + kind + "'");
        claim.checker = *checker;
        if (!entry.contains("expected_verdict") ||
            !entry["expected_verdict"].is_boolean())
            fail(where + " needs a boolean field 'expected_verdict'");
        claim.expected_verdict = entry["expected_verdict"].get<bool>();
        claim.parameters = entry.value("parameters", json::object());
        validate_parameters(claim);
        claims.push_back(std::move(claim));
    }
    return claims;
}

std::string serialize_claims(const std::vector<Claim>& claims) {
    json doc = json::array();
    for (const Claim& claim : claims)
        doc.push_back({{"id", claim.id},
                       {"source", claim.source},
                       {"statement", claim.statement},
                       {"checker", checker_kind_name(claim.checker)},
                       {"parameters", claim.parameters},
                       {"expected_verdict", claim.expected_verdict}});
    return doc.dump(2) + "\n";
}

ClaimReport run_claims(const std::vector<Claim>& claims) {
    std::vector<const Claim*> ordered;
    ordered.reserve(claims.size());
    for (const Claim& claim : claims) ordered.push_back(&claim);
    std::sort(ordered.begin(), ordered.end(),
              [](const Claim* a, const Claim* b) {
                  return id_sort_key(a->id) < id_sort_key(b->id);
              });

    ClaimReport report;
    report.engine_version = kEngineVersion;
    report.timestamp = current_timestamp();
    Context ctx;
    for (const Claim* claim : ordered) {
        ClaimResult result;
        result.id = claim->id;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome outcome = evaluate(*claim, ctx);
            result.verdict = outcome.verdict;
            result.evidence = std::move(outcome.evidence);
            result.diagnostics = std::move(outcome.diagnostics);
        } catch (const std::exception& e) {
            result.verdict = Verdict::unknown;
            result.diagnostics = std::string("checker error: ") + e.what();
        }
        result.runtime_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        if (result.verdict == Verdict::unknown) {
            ++report.unknown_count;
        } else if ((result.verdict == Verdict::yes) != claim->expected_verdict) {
            result.mismatch = true;
            ++report.fail_count;
        } else {
            ++report.pass_count;
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

}  // namespace gpv::claims
