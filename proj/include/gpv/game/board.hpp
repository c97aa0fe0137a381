#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gpv::game {

// Thrown when a move targets a cell that is out of range, occupied, or
// adjacent to a counter.
class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A row of `length` cells, indexed 1..length, holding counters no two of
// which sit on adjacent cells.
class Board {
public:
    Board() = default;
    explicit Board(int length);
    Board(int length, std::initializer_list<int> occupied);

    // Validates the occupied set (range + non-adjacency); throws
    // std::invalid_argument on violation.
    static Board from_cells(int length, const std::vector<int>& occupied);

    int length() const { return length_; }
    const std::vector<int>& occupied() const { return occupied_; }  // sorted
    int counter_count() const { return static_cast<int>(occupied_.size()); }

    bool in_range(int cell) const { return cell >= 1 && cell <= length_; }
    bool is_occupied(int cell) const;
    // A cell is playable when it exists, is empty, and has no occupied
    // neighbour.
    bool is_legal(int cell) const;

    std::vector<int> legal_moves() const;  // ascending cell indices
    bool has_legal_move() const;

    // Board with `cell` added; throws IllegalMove if is_legal(cell) is false.
    Board after(int cell) const;

    // Occupied set as a bitmask, cell i <-> bit i-1. Requires length <= 48.
    std::uint64_t mask() const;

    bool operator==(const Board&) const = default;

private:
    int length_ = 0;
    std::vector<int> occupied_;
};

// Effective lengths of the maximal empty runs of a board. A run of k empty
// cells loses one cell of play value per counter-adjacent end; board ends are
// free. Entries appear in left-to-right run order, zero entries included.
struct Segments {
    std::vector<int> effective_lengths;

    bool operator==(const Segments&) const = default;
};

Segments segments_of(const Board& board);

}  // namespace gpv::game
