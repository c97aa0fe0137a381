#include "gpv/poly/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gpv::poly {

namespace {

// Cell set translated so its minimum corner sits at the origin, sorted.
std::vector<Point> normalized(std::vector<Point> cells) {
    Point min = cells.front();
    for (const Point& c : cells) {
        min.x = std::min(min.x, c.x);
        min.y = std::min(min.y, c.y);
    }
    for (Point& c : cells) c = c - min;
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

std::array<bool, kOrientationCount> fixed_orientations(const Polygon& p) {
    std::vector<Point> base = normalized(p.cells());
    std::array<bool, kOrientationCount> fixes{};
    for (int o = 0; o < kOrientationCount; ++o) {
        std::vector<Point> image;
        image.reserve(base.size());
        for (const Point& c : base) image.push_back(apply_orientation_cell(o, c));
        fixes[o] = normalized(std::move(image)) == base;
    }
    return fixes;
}

SymmetryClass symmetry_class(const Polygon& p) {
    std::array<bool, kOrientationCount> fixes = fixed_orientations(p);
    int rotations = fixes[0] + fixes[1] + fixes[2] + fixes[3];
    int reflections = fixes[4] + fixes[5] + fixes[6] + fixes[7];
    if (rotations == 4) return reflections ? SymmetryClass::full : SymmetryClass::rotation4;
    if (rotations == 2)
        return reflections ? SymmetryClass::rotation2_mirrors : SymmetryClass::rotation2;
    if (reflections) return SymmetryClass::mirror;
    return SymmetryClass::trivial;
}

std::string symmetry_label(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::trivial: return "trivial";
        case SymmetryClass::mirror: return "mirror-1";
        case SymmetryClass::rotation2: return "rotation-2";
        case SymmetryClass::rotation2_mirrors: return "rotation-2+mirrors";
        case SymmetryClass::rotation4: return "rotation-4";
        default: return "full-8";
    }
}

int symmetry_order(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::trivial: return 1;
        case SymmetryClass::mirror: return 2;
        case SymmetryClass::rotation2: return 2;
        case SymmetryClass::rotation2_mirrors: return 4;
        case SymmetryClass::rotation4: return 4;
        default: return 8;
    }
}

bool has_reflection_symmetry(const Polygon& p) {
    std::array<bool, kOrientationCount> fixes = fixed_orientations(p);
    return fixes[4] || fixes[5] || fixes[6] || fixes[7];
}

}  // namespace gpv::poly
