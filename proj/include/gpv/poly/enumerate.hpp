#pragma once

#include <vector>

#include "gpv/poly/polygon.hpp"

namespace gpv::poly {

// All polygons with the given number of sides, one per congruence class
// (translations, rotations and reflections), ordered by canonical word.
std::vector<Polygon> enumerate_polygons(int sides);

struct FamilyCounts {
    // Congruence classes when mirror images are identified.
    int free_count = 0;
    // Classes when only translations and rotations are identified: chiral
    // shapes are counted once per handedness.
    int one_sided_count = 0;

    friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

FamilyCounts family_counts(int sides);

}  // namespace gpv::poly
