#include <doctest.h>

#include <gpv/poly/enumerate.hpp>
#include <gpv/poly/polygon.hpp>
#include <gpv/tiling/bn.hpp>

#include <array>
#include <optional>
#include <set>
#include <string>

using gpv::poly::Point;
using gpv::poly::Polygon;
using gpv::tiling::BNFactorization;
using gpv::tiling::bn_factorize;
using gpv::tiling::boundary_steps;
using gpv::tiling::hat;
using gpv::tiling::verify_bn;

namespace {

// Independent existence oracle: try every rotation and every split of the
// first half into A.B.C by brute force over strings only.
bool factorization_exists(const Polygon& p) {
    const std::string word = boundary_steps(p);
    const int len = static_cast<int>(word.size());
    const int half = len / 2;
    for (int r = 0; r < len; ++r) {
        const std::string rot = word.substr(r) + word.substr(0, r);
        for (int a = 0; a <= half; ++a) {
            for (int b = 0; a + b <= half; ++b) {
                const int c = half - a - b;
                // At most one empty factor keeps u and v independent.
                if ((a == 0) + (b == 0) + (c == 0) > 1) continue;
                if (rot.substr(half, a) == hat(rot.substr(0, a)) &&
                    rot.substr(half + a, b) == hat(rot.substr(a, b)) &&
                    rot.substr(half + a + b, c) == hat(rot.substr(a + b, c))) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

TEST_CASE("boundary steps walk the unit square counterclockwise") {
    CHECK(boundary_steps(Polygon::from_turns("LLLL")) == "ENWS");
}

TEST_CASE("boundary steps of the plus shape") {
    // Twelve unit edges, one per side, starting with the first edge east.
    const std::string steps =
        boundary_steps(Polygon::from_turns("LLRLLRLLRLLR"));
    CHECK(steps.size() == 12);
    CHECK(steps == "ENWNWSWSESEN");
}

TEST_CASE("hat reverses the path and flips every direction") {
    CHECK(hat("") == "");
    CHECK(hat("E") == "W");
    CHECK(hat("ENWS") == "NESW");
    CHECK(hat("EENN") == "SSWW");
    for (const std::string word : {"E", "ENWS", "ENESENWNWSWS"}) {
        CHECK(hat(hat(word)) == word);
    }
}

TEST_CASE("square factorization is the first in scan order") {
    const Polygon square = Polygon::from_turns("LLLL");
    const auto f = bn_factorize(square);
    REQUIRE(f.has_value());
    CHECK(f->rotation_offset == 0);
    CHECK(f->factor_lengths == std::array<int, 3>{1, 1, 0});
    CHECK(f->u == Point{1, 1});
    CHECK(f->v == Point{0, 1});
    CHECK(verify_bn(square, *f));
}

TEST_CASE("plus shape factorization") {
    const Polygon plus = Polygon::from_turns("LLRLLRLLRLLR");
    const auto f = bn_factorize(plus);
    REQUIRE(f.has_value());
    CHECK(f->rotation_offset == 1);
    CHECK(f->factor_lengths == std::array<int, 3>{3, 3, 0});
    CHECK(f->u == Point{-3, 1});
    CHECK(f->v == Point{-2, -1});
    CHECK(verify_bn(plus, *f));
}

TEST_CASE("factorization presence matches the brute-force oracle") {
    for (int sides : {4, 12, 16, 20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            CAPTURE(p.turns());
            CHECK(bn_factorize(p).has_value() == factorization_exists(p));
        }
    }
}

TEST_CASE("exactly one twenty-sided and three twenty-four-sided members "
          "admit no translation-only witness") {
    std::set<std::string> absent;
    for (int sides : {20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            if (!bn_factorize(p)) absent.insert(p.turns());
        }
    }
    CHECK(absent == std::set<std::string>{
                        "LLRLLRLRLLRLRLLRLLRR",
                        "LLRLLRLRLLRLRLRLLRLLRLRR",
                        "LLRLLRLRLRLLRLLRRLLRLLRR",
                        "LLRLLRLRLRLLRLRLLRLRLLRR",
                    });
}

TEST_CASE("every produced factorization passes the verifier") {
    for (int sides : {4, 12, 16, 20, 24}) {
        for (const Polygon& p : gpv::poly::enumerate_polygons(sides)) {
            if (const auto f = bn_factorize(p)) {
                CAPTURE(p.turns());
                CHECK(verify_bn(p, *f));
            }
        }
    }
}

TEST_CASE("verifier rejects tampered factorizations") {
    const Polygon plus = Polygon::from_turns("LLRLLRLLRLLR");
    const BNFactorization good = *bn_factorize(plus);
    REQUIRE(verify_bn(plus, good));

    BNFactorization bad = good;
    bad.u = Point{bad.u.x + 1, bad.u.y};
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.v = Point{0, 0};
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.factor_lengths = {6, 0, 0};  // two empty factors
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.factor_lengths = {2, 3, 1};  // breaks the word identity
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.factor_lengths = {-1, 4, 3};
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.factor_lengths = {3, 3, 3};  // sums past half the word
    CHECK_FALSE(verify_bn(plus, bad));

    bad = good;
    bad.rotation_offset = -1;
    CHECK_FALSE(verify_bn(plus, bad));
}

TEST_CASE("verifier rejects a factorization pinned to the wrong polygon") {
    const auto square_f = *bn_factorize(Polygon::from_turns("LLLL"));
    CHECK_FALSE(verify_bn(Polygon::from_turns("LLRLLRLLRLLR"), square_f));
}
