#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpv/poly/geometry.hpp"

namespace gpv::poly {

enum class WordErrorKind {
    bad_letter,         // character outside the word's alphabet
    not_closed,         // directions or displacement fail to return to start
    self_intersection,  // the walk revisits a lattice point
    degenerate,         // empty word or zero enclosed area
};

// Defect found while turning a boundary word into a polygon. `index` is the
// 0-based position in the word at which the defect was detected.
class WordError : public std::invalid_argument {
public:
    WordError(WordErrorKind kind, std::size_t index, const std::string& message)
        : std::invalid_argument(message), kind_(kind), index_(index) {}

    WordErrorKind kind() const { return kind_; }
    std::size_t index() const { return index_; }

private:
    WordErrorKind kind_;
    std::size_t index_;
};

std::string word_error_kind_name(WordErrorKind kind);

struct CornerCounts {
    int convex = 0;  // 90-degree interior angles
    int reflex = 0;  // 270-degree interior angles

    friend bool operator==(const CornerCounts&, const CornerCounts&) = default;
};

// Simple rectilinear lattice polygon with all edges of length one, stored as
// a counterclockwise turn word plus its realization from (0,0) with first
// edge E. Clockwise input words are accepted and re-oriented.
class Polygon {
public:
    static Polygon from_turns(const std::string& turns);  // throws WordError

    const std::string& turns() const { return turns_; }
    int sides() const { return static_cast<int>(turns_.size()); }
    // vertices()[i] is where edge i starts; n entries, counterclockwise.
    const std::vector<Point>& vertices() const { return vertices_; }
    long long area() const { return area_; }

    CornerCounts corner_counts() const;
    bool is_convex() const;
    // No letter is cyclically followed by an equal letter.
    bool is_alternating() const;
    // Every 'L' is cyclically followed by an 'R'.
    bool every_l_followed_by_r() const;

    // Lower-left corners of the enclosed unit cells, sorted; always exactly
    // area() of them.
    std::vector<Point> cells() const;

    std::string canonical() const;

    friend bool operator==(const Polygon& a, const Polygon& b) {
        return a.turns_ == b.turns_;
    }

private:
    Polygon() = default;

    std::string turns_;
    std::vector<Point> vertices_;
    long long area_ = 0;
};

// Corner census of a general rectilinear boundary given as unit steps over
// ENWS (runs of equal letters form longer edges). Returns how many corners
// turn left (90-degree interior angle) and right (270-degree) along the
// counterclockwise traversal; clockwise input is re-oriented first.
CornerCounts general_right_angle_count(const std::string& steps);

}  // namespace gpv::poly
