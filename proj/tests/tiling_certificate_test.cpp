#include <doctest.h>

#include <gpv/poly/enumerate.hpp>
#include <gpv/poly/polygon.hpp>
#include <gpv/tiling/certificate.hpp>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using gpv::poly::Point;
using gpv::poly::Polygon;
using gpv::tiling::certificate_from_json;
using gpv::tiling::certificate_kind;
using gpv::tiling::placement_cells;
using gpv::tiling::tile_any;
using gpv::tiling::TilingCertificate;
using gpv::tiling::TorusTiling;
using gpv::tiling::verify_certificate;
using nlohmann::json;

namespace {

// Sorted multiset of every covered cell, with duplicates kept, so two
// different-looking certificates describing the same cover compare equal.
std::vector<Point> covered_cells(const Polygon& p, const TorusTiling& t) {
    std::vector<Point> cells;
    for (const auto& pl : t.placements) {
        const auto covered = placement_cells(p, t.width, t.height, pl);
        cells.insert(cells.end(), covered.begin(), covered.end());
    }
    std::sort(cells.begin(), cells.end(), [](Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return cells;
}

}  // namespace

TEST_CASE("certificate search prefers the exact factorization") {
    const auto cert = tile_any(Polygon::from_turns("LLLL"), 4);
    REQUIRE(cert.has_value());
    CHECK(certificate_kind(*cert) == "translation");
    CHECK(verify_certificate(Polygon::from_turns("LLLL"), *cert));
}

TEST_CASE("certificate kinds across the twenty-four family") {
    const auto family = gpv::poly::enumerate_polygons(24);
    REQUIRE(family.size() == 7);
    const std::vector<std::string> expected = {
        "translation", "periodic",    "translation", "periodic",
        "periodic",    "translation", "translation",
    };
    for (std::size_t i = 0; i < family.size(); ++i) {
        CAPTURE(family[i].turns());
        const auto cert = tile_any(family[i], 12);
        REQUIRE(cert.has_value());
        CHECK(certificate_kind(*cert) == expected[i]);
        CHECK(verify_certificate(family[i], *cert));
    }
}

TEST_CASE("every enumerated polygon earns a verified certificate") {
    for (int sides : {4, 12, 16, 20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            CAPTURE(p.turns());
            const auto cert = tile_any(p, 12);
            REQUIRE(cert.has_value());
            CHECK(verify_certificate(p, *cert));
        }
    }
}

TEST_CASE("certificates survive a JSON round-trip") {
    for (int sides : {4, 12, 20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            const auto cert = tile_any(p, 12);
            REQUIRE(cert.has_value());
            const TilingCertificate back =
                certificate_from_json(certificate_to_json(*cert));
            CHECK(back == *cert);
            CHECK(verify_certificate(p, back));
        }
    }
}

TEST_CASE("malformed certificate documents are rejected") {
    CHECK_THROWS_AS(certificate_from_json(json::array()),
                    std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json(json::object()),
                    std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json({{"kind", "banana"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json({{"kind", 3}}),
                    std::invalid_argument);

    json translation = {{"kind", "translation"},
                        {"rotation_offset", 0},
                        {"factors", {{0, 1}, {1, 2}, {2, 2}}},
                        {"u", {1, 1}},
                        {"v", {0, 1}}};
    CHECK(certificate_from_json(translation) ==
          *tile_any(Polygon::from_turns("LLLL"), 4));

    json bad = translation;
    bad.erase("u");
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = translation;
    bad["u"] = {1, 1, 1};
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = translation;
    bad["factors"] = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = translation;
    bad["factors"] = {{0, 1}, {2, 3}, {3, 3}};  // gap between factors
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = translation;
    bad["rotation_offset"] = "zero";
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    json periodic = {{"kind", "periodic"},
                     {"width", 1},
                     {"height", 1},
                     {"placements",
                      {{{"orientation", 0}, {"anchor", {0, 0}}}}}};
    CHECK(certificate_kind(certificate_from_json(periodic)) == "periodic");

    bad = periodic;
    bad.erase("width");
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = periodic;
    bad.erase("placements");
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = periodic;
    bad["placements"][0].erase("anchor");
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = periodic;
    bad["placements"][0]["anchor"] = "origin";
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);

    bad = periodic;
    bad["placements"][0]["orientation"] = 1.5;
    CHECK_THROWS_AS(certificate_from_json(bad), std::invalid_argument);
}

TEST_CASE("random corruption of a torus certificate never verifies") {
    // Mutate the JSON form of a known-good certificate and insist the
    // parser or the verifier catches it. Mutations that happen to describe
    // the identical cover are resampled.
    std::mt19937 rng(20240817);
    std::vector<std::pair<Polygon, TorusTiling>> subjects;
    {
        const Polygon plus = Polygon::from_turns("LLRLLRLLRLLR");
        subjects.emplace_back(
            plus, *gpv::tiling::torus_cover(
                      plus, 5, 5, gpv::tiling::TorusOrientations::all_8));
        const auto family = gpv::poly::enumerate_polygons(24);
        for (int i : {1, 4}) {
            const auto cert = tile_any(family[i], 12);
            REQUIRE(cert.has_value());
            subjects.emplace_back(family[i], std::get<TorusTiling>(*cert));
        }
    }
    for (const auto& [polygon, tiling] : subjects) {
        CAPTURE(polygon.turns());
        REQUIRE(gpv::tiling::verify_torus(polygon, tiling));
        const json original = certificate_to_json(TilingCertificate{tiling});
        const auto baseline = covered_cells(polygon, tiling);
        int rejected = 0;
        for (int trial = 0; trial < 200; ++trial) {
            json mutated = original;
            auto& placements = mutated["placements"];
            const auto index = static_cast<int>(
                rng() % static_cast<unsigned>(placements.size()));
            switch (rng() % 4) {
                case 0:
                    placements[index]["orientation"] =
                        static_cast<int>(rng() % 8);
                    break;
                case 1: {
                    auto& anchor = placements[index]["anchor"];
                    const auto axis = rng() % 2;
                    anchor[axis] = anchor[axis].get<long long>() + 1 +
                                   static_cast<int>(rng() % 3);
                    break;
                }
                case 2:
                    placements.erase(index);
                    break;
                default:
                    placements.push_back(placements[index]);
                    break;
            }
            TilingCertificate parsed;
            try {
                parsed = certificate_from_json(mutated);
            } catch (const std::invalid_argument&) {
                ++rejected;
                continue;
            }
            if (covered_cells(polygon, std::get<TorusTiling>(parsed)) ==
                baseline) {
                --trial;  // same cover as the original; draw again
                continue;
            }
            if (!verify_certificate(polygon, parsed)) ++rejected;
        }
        CHECK(rejected == 200);
    }
}
