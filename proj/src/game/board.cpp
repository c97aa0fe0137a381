#include "gpv/game/board.hpp"

#include <algorithm>
#include <string>

namespace gpv::game {

Board::Board(int length) : length_(length) {
    if (length < 0) throw std::invalid_argument("board length must be >= 0");
}

Board::Board(int length, std::initializer_list<int> occupied)
    : Board(from_cells(length, std::vector<int>(occupied))) {}

Board Board::from_cells(int length, const std::vector<int>& occupied) {
    Board b(length);
    b.occupied_ = occupied;
    std::sort(b.occupied_.begin(), b.occupied_.end());
    for (std::size_t i = 0; i < b.occupied_.size(); ++i) {
        int cell = b.occupied_[i];
        if (!b.in_range(cell))
            throw IllegalMove("occupied cell " + std::to_string(cell) +
                              " outside [1, " + std::to_string(length) + "]");
        if (i > 0 && b.occupied_[i - 1] >= cell - 1)
            throw IllegalMove("occupied cells " + std::to_string(b.occupied_[i - 1]) +
                              " and " + std::to_string(cell) +
                              " are adjacent or duplicated");
    }
    return b;
}

bool Board::is_occupied(int cell) const {
    return std::binary_search(occupied_.begin(), occupied_.end(), cell);
}

bool Board::is_legal(int cell) const {
    if (!in_range(cell) || is_occupied(cell)) return false;
    if (cell > 1 && is_occupied(cell - 1)) return false;
    if (cell < length_ && is_occupied(cell + 1)) return false;
    return true;
}

std::vector<int> Board::legal_moves() const {
    std::vector<int> moves;
    for (int cell = 1; cell <= length_; ++cell)
        if (is_legal(cell)) moves.push_back(cell);
    return moves;
}

bool Board::has_legal_move() const {
    for (int cell = 1; cell <= length_; ++cell)
        if (is_legal(cell)) return true;
    return false;
}

Board Board::after(int cell) const {
    if (!is_legal(cell))
        throw IllegalMove("illegal move at cell " + std::to_string(cell));
    Board next(*this);
    next.occupied_.insert(
        std::upper_bound(next.occupied_.begin(), next.occupied_.end(), cell), cell);
    return next;
}

std::uint64_t Board::mask() const {
    if (length_ > 48) throw std::invalid_argument("mask() supports length <= 48");
    std::uint64_t m = 0;
    for (int cell : occupied_) m |= std::uint64_t{1} << (cell - 1);
    return m;
}

Segments segments_of(const Board& board) {
    Segments out;
    int n = board.length();
    int run_start = 1;  // first cell of the current empty run
    auto flush = [&](int run_end_exclusive) {
        // run covers [run_start, run_end_exclusive)
        int len = run_end_exclusive - run_start;
        if (len <= 0) return;
        int flanks = 0;
        if (run_start > 1) ++flanks;                // counter on the left
        if (run_end_exclusive <= n) ++flanks;       // counter on the right
        out.effective_lengths.push_back(std::max(len - flanks, 0));
    };
    for (int cell : board.occupied()) {
        flush(cell);
        run_start = cell + 1;
    }
    flush(n + 1);
    return out;
}

}  // namespace gpv::game
