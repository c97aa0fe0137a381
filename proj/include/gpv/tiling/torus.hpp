#pragma once

#include <optional>
#include <vector>

#include "gpv/poly/geometry.hpp"
#include "gpv/poly/polygon.hpp"

namespace gpv::tiling {

using poly::Point;
using poly::Polygon;

enum class TorusOrientations { translations_only, all_8 };

// One copy of the tile on the torus: orient the tile's cells, translate by
// `anchor`, then wrap coordinates modulo the torus dimensions.
struct Placement {
    int orientation = 0;
    Point anchor;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct TorusTiling {
    int width = 0;
    int height = 0;
    std::vector<Placement> placements;

    friend bool operator==(const TorusTiling&, const TorusTiling&) = default;
};

// Wrapped cells covered by one placement, sorted; empty when wrapping makes
// the copy overlap itself (such a placement is unusable).
std::vector<Point> placement_cells(const Polygon& p, int width, int height,
                                   const Placement& placement);

// Exact cover of one torus by copies of the polygon: repeatedly take the
// least uncovered cell and try every placement covering it. Deterministic;
// first complete cover wins.
std::optional<TorusTiling> torus_cover(const Polygon& p, int width, int height,
                                       TorusOrientations mode);

// Scans tori (w, h) in lexicographic order with w, h <= max_dim and w*h a
// multiple of the area. A result proves a periodic plane tiling. Throws
// std::invalid_argument when max_dim admits no candidate torus at all.
std::optional<TorusTiling> torus_search(const Polygon& p, int max_dim,
                                        TorusOrientations mode);

// Searches for a fundamental domain made of the tile plus one reoriented
// copy whose lattice translates partition the plane (covers half-turn and
// glide-reflection tilings that no bounded torus scan reaches cheaply).
// On success the tiling is folded onto a straight torus and returned as a
// verifier-checked certificate; the smallest foldable torus is found first.
std::optional<TorusTiling> pair_domain_search(const Polygon& p);

// True when some torus (w, h) with w, h <= max_dim has w*h divisible by
// `area` (the precondition for torus_search to have anything to try).
bool has_candidate_torus(long long area, int max_dim);

// Re-rasterizes every placement and checks the exact-once cover and the
// placement-count/area bookkeeping.
bool verify_torus(const Polygon& p, const TorusTiling& tiling);

}  // namespace gpv::tiling
