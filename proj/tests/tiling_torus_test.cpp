#include <doctest.h>

#include <gpv/poly/enumerate.hpp>
#include <gpv/poly/polygon.hpp>
#include <gpv/tiling/torus.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

using gpv::poly::Point;
using gpv::poly::Polygon;
using gpv::tiling::has_candidate_torus;
using gpv::tiling::pair_domain_search;
using gpv::tiling::Placement;
using gpv::tiling::placement_cells;
using gpv::tiling::torus_cover;
using gpv::tiling::torus_search;
using gpv::tiling::TorusOrientations;
using gpv::tiling::TorusTiling;
using gpv::tiling::verify_torus;

namespace {

const Polygon& square() {
    static const Polygon p = Polygon::from_turns("LLLL");
    return p;
}

const Polygon& plus() {
    static const Polygon p = Polygon::from_turns("LLRLLRLLRLLR");
    return p;
}

}  // namespace

TEST_CASE("placement cells translate and wrap") {
    CHECK(placement_cells(square(), 1, 2, {0, {0, 0}}) ==
          std::vector<Point>{{0, 0}});
    // Anchored at the far corner of a 5x5 torus, the plus wraps around both
    // edges but still covers five distinct cells.
    const auto wrapped = placement_cells(plus(), 5, 5, {0, {4, 4}});
    CHECK(wrapped.size() == 5);
}

TEST_CASE("a placement that overlaps itself after wrapping is unusable") {
    // On a width-1 torus every column collapses, so the plus lands on the
    // same cell twice and the placement is reported empty.
    CHECK(placement_cells(plus(), 1, 5, {0, {0, 0}}).empty());
}

TEST_CASE("torus cover of the unit square") {
    const auto t = torus_cover(square(), 1, 1, TorusOrientations::all_8);
    REQUIRE(t.has_value());
    CHECK(t->width == 1);
    CHECK(t->height == 1);
    CHECK(t->placements == std::vector<Placement>{{0, {0, 0}}});
    CHECK(verify_torus(square(), *t));
}

TEST_CASE("torus cover rejects non-positive dimensions") {
    CHECK_THROWS_AS(torus_cover(square(), 0, 1, TorusOrientations::all_8),
                    std::invalid_argument);
    CHECK_THROWS_AS(torus_cover(square(), 1, -1, TorusOrientations::all_8),
                    std::invalid_argument);
}

TEST_CASE("torus cover is absent when the area does not divide the torus") {
    CHECK(torus_cover(plus(), 2, 2, TorusOrientations::all_8) ==
          std::nullopt);
}

TEST_CASE("the plus covers the five-by-five torus by translations") {
    const auto t =
        torus_cover(plus(), 5, 5, TorusOrientations::translations_only);
    REQUIRE(t.has_value());
    CHECK(t->width == 5);
    CHECK(t->height == 5);
    CHECK(t->placements == std::vector<Placement>{{0, {0, 0}},
                                                  {0, {1, 2}},
                                                  {0, {2, 4}},
                                                  {0, {3, 1}},
                                                  {0, {4, 3}}});
    CHECK(verify_torus(plus(), *t));
}

TEST_CASE("candidate tori exist exactly when some product divides out") {
    CHECK(has_candidate_torus(1, 1));
    CHECK(has_candidate_torus(5, 5));
    CHECK_FALSE(has_candidate_torus(5, 2));
    CHECK_FALSE(has_candidate_torus(7, 6));
    CHECK(has_candidate_torus(7, 7));
    CHECK(has_candidate_torus(12, 4));  // 4 * 3
}

TEST_CASE("torus search throws when the bound admits no candidate torus") {
    CHECK_THROWS_AS(
        torus_search(plus(), 4, TorusOrientations::translations_only),
        std::invalid_argument);
}

TEST_CASE("torus search finds the smallest torus in scan order") {
    const auto t = torus_search(square(), 3, TorusOrientations::all_8);
    REQUIRE(t.has_value());
    CHECK(t->width == 1);
    CHECK(t->height == 1);
}

TEST_CASE("translation witnesses for the small-area family members") {
    // Each of these admits a boundary factorization, and a torus cover by
    // translations alone exists within single-digit dimensions.
    const auto t16 = torus_search(gpv::poly::enumerate_polygons(16)[0], 8,
                                  TorusOrientations::translations_only);
    REQUIRE(t16.has_value());
    CHECK(t16->width == 4);
    CHECK(t16->height == 8);
    CHECK(t16->placements.size() == 4);

    const auto t20 = torus_search(gpv::poly::enumerate_polygons(20)[0], 9,
                                  TorusOrientations::translations_only);
    REQUIRE(t20.has_value());
    CHECK(t20->width == 9);
    CHECK(t20->height == 9);
    CHECK(t20->placements.size() == 9);
}

TEST_CASE("no translation-only torus up to twelve for the odd one out") {
    // The twenty-sided member without a boundary factorization also has no
    // translation-only torus cover in this range.
    const Polygon p = Polygon::from_turns("LLRLLRLRLLRLRLLRLLRR");
    CHECK(torus_search(p, 12, TorusOrientations::translations_only) ==
          std::nullopt);
}

TEST_CASE("torus search on the twenty-four family at bound twelve") {
    const auto family = gpv::poly::enumerate_polygons(24);
    REQUIRE(family.size() == 7);

    // Only the first and last members fit a torus this small; both need a
    // non-translation orientation.
    const auto first = torus_search(family[0], 12, TorusOrientations::all_8);
    REQUIRE(first.has_value());
    CHECK(first->width == 4);
    CHECK(first->height == 6);
    CHECK(first->placements ==
          std::vector<Placement>{{0, {0, 0}}, {4, {2, 0}}});
    CHECK(verify_torus(family[0], *first));

    const auto last = torus_search(family[6], 12, TorusOrientations::all_8);
    REQUIRE(last.has_value());
    CHECK(last->width == 6);
    CHECK(last->height == 6);
    CHECK(last->placements ==
          std::vector<Placement>{{0, {0, 0}}, {1, {1, 5}}});
    CHECK(verify_torus(family[6], *last));

    for (int i : {1, 2, 3, 4, 5}) {
        CAPTURE(family[i].turns());
        CHECK(torus_search(family[i], 12, TorusOrientations::all_8) ==
              std::nullopt);
    }
}

TEST_CASE("pair domain search certifies every enumerated polygon") {
    for (int sides : {4, 12, 16, 20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            CAPTURE(p.turns());
            const auto t = pair_domain_search(p);
            REQUIRE(t.has_value());
            CHECK(verify_torus(p, *t));
            // Two copies per domain, replicated across the torus.
            CHECK(static_cast<long long>(t->placements.size()) * p.area() ==
                  static_cast<long long>(t->width) * t->height);
            CHECK(t->placements.size() % 2 == 0);
        }
    }
}

TEST_CASE("pair domain search is deterministic") {
    const auto family = gpv::poly::enumerate_polygons(24);
    for (const Polygon& p : family) {
        CHECK(pair_domain_search(p) == pair_domain_search(p));
    }
}

TEST_CASE("pair domain torus dimensions across the family") {
    auto dims = [](const Polygon& p) {
        const auto t = pair_domain_search(p);
        REQUIRE(t.has_value());
        return Point{t->width, t->height};
    };
    CHECK(dims(square()) == Point{1, 2});
    CHECK(dims(plus()) == Point{5, 10});
    CHECK(dims(gpv::poly::enumerate_polygons(16)[0]) == Point{4, 4});

    const auto f20 = gpv::poly::enumerate_polygons(20);
    CHECK(dims(f20[0]) == Point{6, 6});
    CHECK(dims(f20[1]) == Point{22, 22});
    CHECK(dims(f20[2]) == Point{11, 22});
    CHECK(dims(f20[3]) == Point{13, 26});

    const auto f24 = gpv::poly::enumerate_polygons(24);
    CHECK(dims(f24[0]) == Point{4, 6});
    CHECK(dims(f24[1]) == Point{14, 14});
    CHECK(dims(f24[2]) == Point{14, 14});
    CHECK(dims(f24[3]) == Point{28, 28});
    CHECK(dims(f24[4]) == Point{32, 32});
    CHECK(dims(f24[5]) == Point{14, 14});
    CHECK(dims(f24[6]) == Point{6, 6});
}

TEST_CASE("pair domain search uses a rotated copy for the sixteen-gon") {
    const auto t = pair_domain_search(gpv::poly::enumerate_polygons(16)[0]);
    REQUIRE(t.has_value());
    CHECK(t->placements == std::vector<Placement>{{0, {0, 0}}, {1, {1, 3}}});
}

TEST_CASE("torus verifier rejects corrupted tilings") {
    const TorusTiling good =
        *torus_cover(plus(), 5, 5, TorusOrientations::translations_only);
    REQUIRE(verify_torus(plus(), good));

    TorusTiling bad = good;
    bad.placements.pop_back();
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.placements.push_back(good.placements[0]);
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.placements[2].anchor = Point{2, 3};
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.placements[0].orientation = 8;
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.placements[0].orientation = -1;
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.placements[0].anchor = Point{5, 0};  // out of fundamental range
    CHECK_FALSE(verify_torus(plus(), bad));

    bad = good;
    bad.width = 10;
    CHECK_FALSE(verify_torus(plus(), bad));
}

TEST_CASE("torus verifier rejects a tiling pinned to the wrong polygon") {
    const TorusTiling t =
        *torus_cover(square(), 2, 2, TorusOrientations::translations_only);
    CHECK_FALSE(verify_torus(plus(), t));
}
