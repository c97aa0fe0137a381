#pragma once

#include <array>
#include <string>

#include "gpv/poly/geometry.hpp"
#include "gpv/poly/polygon.hpp"

namespace gpv::poly {

// Subgroup of the square's isometry group fixing the polygon up to
// translation, named by conjugacy class.
enum class SymmetryClass {
    trivial,           // order 1
    mirror,            // order 2: one reflection
    rotation2,         // order 2: half turn only
    rotation2_mirrors, // order 4: half turn plus two reflections
    rotation4,         // order 4: all rotations, no reflection
    full,              // order 8
};

// Which of the eight orientations map the polygon onto a translate of
// itself. Index 0 (identity) is always true.
std::array<bool, kOrientationCount> fixed_orientations(const Polygon& p);

SymmetryClass symmetry_class(const Polygon& p);
std::string symmetry_label(SymmetryClass c);  // e.g. "rotation-2+mirrors"
int symmetry_order(SymmetryClass c);

// True when some reflection fixes the polygon (its mirror image is a
// translated/rotated copy of itself).
bool has_reflection_symmetry(const Polygon& p);

}  // namespace gpv::poly
