#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>

namespace gpv::poly {

struct Point {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline long long manhattan(Point p) { return std::llabs(p.x) + std::llabs(p.y); }

// Axis directions in counterclockwise order.
enum class Dir : int { E = 0, N = 1, W = 2, S = 3 };

inline Point unit(Dir d) {
    switch (d) {
        case Dir::E: return {1, 0};
        case Dir::N: return {0, 1};
        case Dir::W: return {-1, 0};
        default: return {0, -1};
    }
}

inline Dir rotate_ccw(Dir d, int quarter_turns) {
    return Dir(((static_cast<int>(d) + quarter_turns) % 4 + 4) % 4);
}

inline Dir opposite(Dir d) { return rotate_ccw(d, 2); }

inline bool is_horizontal(Dir d) { return d == Dir::E || d == Dir::W; }

// Lattice-preserving plane isometries: 0..3 rotate counterclockwise by 90*o
// degrees about the origin; 4..7 reflect across the x axis and then rotate
// counterclockwise by 90*(o-4) degrees.
inline constexpr int kOrientationCount = 8;

inline Point apply_orientation(int o, Point p) {
    if (o >= 4) p.y = -p.y;
    switch (o % 4) {
        case 0: return p;
        case 1: return {-p.y, p.x};
        case 2: return {-p.x, -p.y};
        default: return {p.y, -p.x};
    }
}

inline Dir apply_orientation(int o, Dir d) {
    int v = static_cast<int>(d);
    if (o >= 4) v = (4 - v) % 4;
    return Dir((v + o) % 4);
}

// Image of the unit square whose lower-left corner is `cell`; squares map to
// squares, so the image is again named by its lower-left corner.
inline Point apply_orientation_cell(int o, Point cell) {
    Point a = apply_orientation(o, cell);
    Point b = apply_orientation(o, Point{cell.x + 1, cell.y + 1});
    return {std::min(a.x, b.x), std::min(a.y, b.y)};
}

// The orientation undoing o: reflections here are involutions, rotations
// invert to the complementary rotation.
inline int inverse_orientation(int o) { return o >= 4 ? o : (4 - o) % 4; }

}  // namespace gpv::poly
