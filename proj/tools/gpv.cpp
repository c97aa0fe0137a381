#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gpv/claims/claims.hpp"
#include "gpv/claims/report.hpp"
#include "gpv/game/board.hpp"
#include "gpv/game/grundy.hpp"
#include "gpv/game/period.hpp"
#include "gpv/game/strategy.hpp"
#include "gpv/poly/enumerate.hpp"
#include "gpv/poly/polygon.hpp"
#include "gpv/poly/symmetry.hpp"
#include "gpv/render/render.hpp"
#include "gpv/tiling/certificate.hpp"
#include "gpv/version.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;  // mismatch, failed verification, or unknown
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out.good())
        throw std::invalid_argument("cannot write file: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int run_game_winner(int spaces) {
    gpv::game::GrundyTable table;
    const gpv::game::Player who = gpv::game::winner(spaces, table);
    std::cout << gpv::game::player_char(who)
              << " (grundy=" << gpv::game::grundy_free_row(spaces, table)
              << ")\n";
    return kExitSuccess;
}

int run_game_grundy(int max_n, bool detect, const std::string& json_path) {
    const std::vector<int> values = gpv::game::grundy_sequence(max_n);
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << (i ? " " : "") << values[i];
    std::cout << '\n';
    std::optional<gpv::game::PeriodCertificate> period;
    if (detect) {
        period = gpv::game::detect_period(values);
        if (period)
            std::cout << "period: preperiod=" << period->preperiod
                      << " period=" << period->period << " window=["
                      << period->window_begin << "," << period->window_end
                      << "]\n";
        else
            std::cout << "period: none found\n";
    }
    if (!json_path.empty()) {
        nlohmann::json doc = {{"max", max_n}, {"values", values}};
        if (detect) {
            doc["period"] = nullptr;
            if (period)
                doc["period"] = {{"preperiod", period->preperiod},
                                 {"period", period->period},
                                 {"window_begin", period->window_begin},
                                 {"window_end", period->window_end}};
        }
        write_file(json_path, doc.dump(2) + "\n");
    }
    return kExitSuccess;
}

int run_verify_mirror(int max_odd) {
    for (int n = 1; n <= max_odd; n += 2) {
        const bool ok = gpv::game::verify_strategy(
            gpv::game::mirror_strategy(n), n, gpv::game::Mover::first);
        std::cout << "n=" << n << " " << (ok ? "pass" : "FAIL") << '\n';
        if (!ok) {
            std::cout << "mirror strategy refuted at n=" << n << '\n';
            return kExitFailure;
        }
    }
    std::cout << "all odd lengths up to " << max_odd << " verified\n";
    return kExitSuccess;
}

int run_poly_enumerate(int sides, const std::string& json_path,
                       const std::string& svg_dir) {
    if (sides < 4 || sides % 2 != 0) {
        std::cerr << "error: --sides must be an even number of at least 4\n";
        return kExitUsage;
    }
    const auto family = gpv::poly::enumerate_polygons(sides);
    std::cout << family.size() << '\n';
    for (const auto& p : family) std::cout << p.turns() << '\n';
    if (!json_path.empty()) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& p : family)
            members.push_back(
                {{"turns", p.turns()},
                 {"area", p.area()},
                 {"symmetry",
                  gpv::poly::symmetry_label(gpv::poly::symmetry_class(p))}});
        const nlohmann::json doc = {
            {"sides", sides},
            {"count", static_cast<int>(family.size())},
            {"polygons", members}};
        write_file(json_path, doc.dump(2) + "\n");
    }
    if (!svg_dir.empty()) {
        std::filesystem::create_directories(svg_dir);
        for (const auto& p : family)
            write_file(svg_dir + "/poly-" + p.turns() + ".svg",
                       gpv::render::polygon_figure(p));
    }
    return kExitSuccess;
}

int run_poly_props(const std::string& turns) {
    const auto p = gpv::poly::Polygon::from_turns(turns);
    const auto corners = p.corner_counts();
    const auto symmetry = gpv::poly::symmetry_class(p);
    std::cout << "turns: " << p.turns() << '\n'
              << "canonical: " << p.canonical() << '\n'
              << "sides: " << p.sides() << '\n'
              << "area: " << p.area() << '\n'
              << "corners: " << corners.convex << " convex, " << corners.reflex
              << " reflex\n"
              << "convex: " << yes_no(p.is_convex()) << '\n'
              << "alternating: " << yes_no(p.is_alternating()) << '\n'
              << "every-convex-then-reflex: "
              << yes_no(p.every_l_followed_by_r()) << '\n'
              << "symmetry: " << gpv::poly::symmetry_label(symmetry)
              << " (order " << gpv::poly::symmetry_order(symmetry) << ")\n";
    return kExitSuccess;
}

int run_tile(const std::string& turns, const std::string& method, int max_torus,
             const std::string& svg_path, const std::string& cert_path) {
    const auto p = gpv::poly::Polygon::from_turns(turns);
    std::optional<gpv::tiling::TilingCertificate> cert;
    if (method == "auto") {
        cert = gpv::tiling::tile_any(p, max_torus);
    } else if (method == "bn") {
        if (auto f = gpv::tiling::bn_factorize(p))
            cert = gpv::tiling::TilingCertificate{*f};
    } else {  // torus; an infeasible bound surfaces as invalid_argument
        if (auto t = gpv::tiling::torus_search(
                p, max_torus, gpv::tiling::TorusOrientations::all_8))
            cert = gpv::tiling::TilingCertificate{*t};
    }
    if (!cert) {
        std::cout << "unknown\n";
        return kExitFailure;
    }
    if (!gpv::tiling::verify_certificate(p, *cert)) {
        std::cerr << "error: produced certificate failed verification\n";
        return kExitFailure;
    }
    if (const auto* f = std::get_if<gpv::tiling::BNFactorization>(&*cert)) {
        std::cout << "translation certificate: rotation=" << f->rotation_offset
                  << " factors=" << f->factor_lengths[0] << ","
                  << f->factor_lengths[1] << "," << f->factor_lengths[2]
                  << " u=(" << f->u.x << "," << f->u.y << ") v=(" << f->v.x
                  << "," << f->v.y << ")\n";
    } else {
        const auto& t = std::get<gpv::tiling::TorusTiling>(*cert);
        std::cout << "periodic certificate: torus " << t.width << "x"
                  << t.height << " with " << t.placements.size()
                  << " placements\n";
    }
    if (!cert_path.empty())
        write_file(cert_path,
                   gpv::tiling::certificate_to_json(*cert).dump(2) + "\n");
    if (!svg_path.empty())
        write_file(svg_path, gpv::render::tiling_figure(*cert, p, 3));
    return kExitSuccess;
}

int run_claims(const std::string& claims_path, const std::string& out_path,
               const std::string& md_path) {
    auto claims = gpv::claims::builtin_claims();
    if (!claims_path.empty()) {
        auto extra = gpv::claims::load_claims(read_file(claims_path));
        claims.insert(claims.end(), extra.begin(), extra.end());
    }
    const gpv::claims::ClaimReport report = gpv::claims::run_claims(claims);
    std::cout << gpv::claims::render_report_markdown(report);
    if (!out_path.empty())
        write_file(out_path, gpv::claims::render_report_json(report));
    if (!md_path.empty())
        write_file(md_path, gpv::claims::render_report_markdown(report));
    return report.fail_count == 0 ? kExitSuccess : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mechanically checked answers for the row game and the "
                 "equilateral right-angled polygon family"};
    app.set_version_flag("--version", gpv::kEngineVersion);
    app.require_subcommand(1);
    std::function<int()> action;

    auto* game = app.add_subcommand("game", "Row game analysis");
    game->require_subcommand(1);
    {
        auto* winner = game->add_subcommand(
            "winner", "Optimal-play winner for a row of n spaces");
        auto spaces = std::make_shared<int>(0);
        winner->add_option("--spaces", *spaces, "Row length")
            ->required()
            ->check(CLI::NonNegativeNumber);
        winner->callback([spaces, &action] {
            action = [spaces] { return run_game_winner(*spaces); };
        });

        auto* grundy = game->add_subcommand(
            "grundy", "Grundy values g[0..N] of free rows");
        auto max_n = std::make_shared<int>(0);
        auto detect = std::make_shared<bool>(false);
        auto json_path = std::make_shared<std::string>();
        grundy->add_option("--max", *max_n, "Largest row length")
            ->required()
            ->check(CLI::NonNegativeNumber);
        grundy->add_flag("--detect-period", *detect,
                         "Also certify eventual periodicity");
        grundy->add_option("--json", *json_path, "Write the sequence as JSON");
        grundy->callback([max_n, detect, json_path, &action] {
            action = [max_n, detect, json_path] {
                return run_game_grundy(*max_n, *detect, *json_path);
            };
        });

        auto* mirror = game->add_subcommand(
            "verify-mirror",
            "Exhaustively verify the centre-and-mirror strategy");
        auto max_odd = std::make_shared<int>(1);
        mirror->add_option("--max-odd", *max_odd, "Largest odd row length")
            ->required()
            ->check(CLI::PositiveNumber);
        mirror->callback([max_odd, &action] {
            action = [max_odd] { return run_verify_mirror(*max_odd); };
        });
    }

    auto* poly = app.add_subcommand("poly", "Polygon family analysis");
    poly->require_subcommand(1);
    {
        auto* enumerate = poly->add_subcommand(
            "enumerate", "List the family with a given side count");
        auto sides = std::make_shared<int>(0);
        auto json_path = std::make_shared<std::string>();
        auto svg_dir = std::make_shared<std::string>();
        enumerate->add_option("--sides", *sides, "Number of sides")->required();
        enumerate->add_option("--json", *json_path, "Write the list as JSON");
        enumerate->add_option("--svg", *svg_dir,
                              "Write one figure per member into a directory");
        enumerate->callback([sides, json_path, svg_dir, &action] {
            action = [sides, json_path, svg_dir] {
                return run_poly_enumerate(*sides, *json_path, *svg_dir);
            };
        });

        auto* props =
            poly->add_subcommand("props", "Properties of one turn word");
        auto turns = std::make_shared<std::string>();
        props->add_option("--turns", *turns, "Turn word over L and R")
            ->required();
        props->callback([turns, &action] {
            action = [turns] { return run_poly_props(*turns); };
        });
    }

    {
        auto* tile = app.add_subcommand(
            "tile", "Search for a plane-tiling certificate");
        auto turns = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("auto");
        auto max_torus = std::make_shared<int>(12);
        auto svg_path = std::make_shared<std::string>();
        auto cert_path = std::make_shared<std::string>();
        tile->add_option("--turns", *turns, "Turn word over L and R")
            ->required();
        tile->add_option("--method", *method,
                         "Certificate search strategy")
            ->check(CLI::IsMember({"auto", "bn", "torus"}));
        tile->add_option("--max-torus", *max_torus,
                         "Bound on torus dimensions")
            ->check(CLI::PositiveNumber);
        tile->add_option("--svg", *svg_path, "Write a patch figure");
        tile->add_option("--cert", *cert_path, "Write the certificate JSON");
        tile->callback([turns, method, max_torus, svg_path, cert_path,
                        &action] {
            action = [turns, method, max_torus, svg_path, cert_path] {
                return run_tile(*turns, *method, *max_torus, *svg_path,
                                *cert_path);
            };
        });
    }

    {
        auto* claims = app.add_subcommand("claims", "Claim verification");
        claims->require_subcommand(1);
        auto* run = claims->add_subcommand(
            "run", "Evaluate the builtin (plus optional loaded) claims");
        auto claims_path = std::make_shared<std::string>();
        auto out_path = std::make_shared<std::string>();
        auto md_path = std::make_shared<std::string>();
        run->add_option("--claims", *claims_path,
                        "Additional claims file (JSON array)");
        run->add_option("--out", *out_path, "Write the JSON report");
        run->add_option("--md", *md_path, "Write the Markdown report");
        run->callback([claims_path, out_path, md_path, &action] {
            action = [claims_path, out_path, md_path] {
                return run_claims(*claims_path, *out_path, *md_path);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        return action ? action() : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
