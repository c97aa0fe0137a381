#include "gpv/poly/polygon.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gpv/poly/word.hpp"

namespace gpv::poly {

namespace {

// Twice the signed area of the closed walk (positive = counterclockwise).
long long shoelace2(const std::vector<Point>& vertices) {
    long long sum = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % vertices.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

// Walks unit steps from (0,0), collecting the visited lattice points and
// rejecting revisits; returns the n visited points of a closed simple walk.
std::vector<Point> realize_simple_closed(const std::vector<Dir>& steps) {
    std::vector<Point> points;
    points.reserve(steps.size());
    std::map<Point, std::size_t> seen;
    Point pos{0, 0};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        points.push_back(pos);
        seen.emplace(pos, i);
        pos = pos + unit(steps[i]);
        auto hit = seen.find(pos);
        if (hit != seen.end()) {
            if (i + 1 == steps.size() && hit->second == 0) return points;
            throw WordError(WordErrorKind::self_intersection, i,
                            "walk revisits a lattice point at step " +
                                std::to_string(i));
        }
    }
    throw WordError(WordErrorKind::not_closed, steps.size() - 1,
                    "walk ends away from its starting point");
}

}  // namespace

std::string word_error_kind_name(WordErrorKind kind) {
    switch (kind) {
        case WordErrorKind::bad_letter: return "bad_letter";
        case WordErrorKind::not_closed: return "not_closed";
        case WordErrorKind::self_intersection: return "self_intersection";
        default: return "degenerate";
    }
}

Polygon Polygon::from_turns(const std::string& turns) {
    const std::size_t n = turns.size();
    if (n == 0)
        throw WordError(WordErrorKind::degenerate, 0, "empty turn word");
    for (std::size_t i = 0; i < n; ++i)
        if (!is_turn_letter(turns[i]))
            throw WordError(WordErrorKind::bad_letter, i,
                            std::string("turn letter must be L or R, got '") +
                                turns[i] + "' at position " + std::to_string(i));

    int net = 0;
    for (char c : turns) net += (c == 'L') ? 1 : -1;
    if (net % 4 != 0)
        throw WordError(WordErrorKind::not_closed, n - 1,
                        "turns do not bring the first edge back to itself");

    std::vector<Dir> steps;
    steps.reserve(n);
    Dir d = Dir::E;
    for (std::size_t i = 0; i < n; ++i) {
        steps.push_back(d);
        if (i + 1 < n) d = apply_turn(d, turns[i]);
    }

    std::vector<Point> points = realize_simple_closed(steps);

    long long area2 = shoelace2(points);
    if (area2 == 0)
        throw WordError(WordErrorKind::degenerate, n - 1,
                        "walk encloses no area");
    if (area2 < 0) {
        // Clockwise word: re-walk the same boundary the other way round.
        return from_turns(reverse_complement_turns(turns));
    }

    Polygon p;
    p.turns_ = turns;
    p.vertices_ = std::move(points);
    p.area_ = area2 / 2;
    return p;
}

CornerCounts Polygon::corner_counts() const {
    CornerCounts counts;
    for (char c : turns_) (c == 'L' ? counts.convex : counts.reflex)++;
    return counts;
}

bool Polygon::is_convex() const { return corner_counts().reflex == 0; }

bool Polygon::is_alternating() const {
    for (std::size_t i = 0; i < turns_.size(); ++i)
        if (turns_[i] == turns_[(i + 1) % turns_.size()]) return false;
    return true;
}

bool Polygon::every_l_followed_by_r() const {
    for (std::size_t i = 0; i < turns_.size(); ++i)
        if (turns_[i] == 'L' && turns_[(i + 1) % turns_.size()] != 'R')
            return false;
    return true;
}

std::vector<Point> Polygon::cells() const {
    // Scanline parity fill: for each unit row, the x positions of vertical
    // edges crossing that row pair up into inside intervals.
    std::map<long long, std::vector<long long>> crossings_by_row;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[(i + 1) % n];
        if (a.x == b.x) crossings_by_row[std::min(a.y, b.y)].push_back(a.x);
    }
    std::vector<Point> cells;
    for (auto& [row, xs] : crossings_by_row) {
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2)
            for (long long x = xs[i]; x < xs[i + 1]; ++x)
                cells.push_back({x, row});
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::string Polygon::canonical() const { return canonical_turns(turns_); }

CornerCounts general_right_angle_count(const std::string& steps) {
    const std::size_t n = steps.size();
    if (n == 0)
        throw WordError(WordErrorKind::degenerate, 0, "empty step word");
    std::vector<Dir> dirs;
    dirs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (steps[i] != 'E' && steps[i] != 'N' && steps[i] != 'W' &&
            steps[i] != 'S')
            throw WordError(WordErrorKind::bad_letter, i,
                            std::string("step letter must be one of ENWS, got '") +
                                steps[i] + "' at position " + std::to_string(i));
        dirs.push_back(dir_from_char(steps[i]));
    }

    std::vector<Point> points = realize_simple_closed(dirs);
    long long area2 = shoelace2(points);
    if (area2 == 0)
        throw WordError(WordErrorKind::degenerate, n - 1,
                        "walk encloses no area");
    if (area2 < 0) {
        std::string ccw;
        ccw.reserve(n);
        for (std::size_t i = n; i-- > 0;)
            ccw.push_back(dir_char(opposite(dirs[i])));
        return general_right_angle_count(ccw);
    }

    CornerCounts counts;
    for (std::size_t i = 0; i < n; ++i) {
        Dir from = dirs[i];
        Dir to = dirs[(i + 1) % n];
        if (from == to) continue;  // straight run within a longer edge
        (turn_between(from, to) == 'L' ? counts.convex : counts.reflex)++;
    }
    return counts;
}

}  // namespace gpv::poly
