#pragma once

#include <array>
#include <optional>
#include <string>

#include "gpv/poly/geometry.hpp"
#include "gpv/poly/polygon.hpp"

namespace gpv::tiling {

using poly::Point;
using poly::Polygon;

// Boundary of the polygon as a cyclic step word over ENWS.
std::string boundary_steps(const Polygon& p);

// The same path walked backwards: reversed with E/W and N/S exchanged.
std::string hat(const std::string& steps);

// Factorization of the boundary word as A.B.C.hat(A).hat(B).hat(C) after a
// cyclic rotation. Such a factorization witnesses that translates of the
// polygon along u = displacement(A.B) and v = displacement(B.C) tile the
// plane. At most one factor is empty (and then it is C).
struct BNFactorization {
    int rotation_offset = 0;              // index where factor A starts
    std::array<int, 3> factor_lengths{};  // |A|, |B|, |C|
    Point u;
    Point v;

    friend bool operator==(const BNFactorization&, const BNFactorization&) = default;
};

// First factorization in scan order (rotation, then |C| ascending, then |A|
// ascending), or absent when none exists. Absence rules out translation-only
// tilings but says nothing about tilings that rotate or reflect the tile.
std::optional<BNFactorization> bn_factorize(const Polygon& p);

// Re-checks a factorization from scratch: the word identity, the factor
// bookkeeping, and that the translation lattice really partitions the plane
// into copies of the polygon (cells pairwise distinct modulo the lattice and
// |det(u, v)| equal to the area).
bool verify_bn(const Polygon& p, const BNFactorization& f);

}  // namespace gpv::tiling
