#include "gpv/game/grundy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpv::game {

namespace {

int mex(const std::vector<bool>& seen) {
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v]) return static_cast<int>(v);
    return static_cast<int>(seen.size());
}

int brute_force_value(const Board& board, GrundyTable& table, BruteForceMemo& memo);

int brute_force_mask(int length, std::uint64_t mask, GrundyTable& table,
                     BruteForceMemo& memo) {
    std::uint64_t key = (static_cast<std::uint64_t>(length) << 48) | mask;
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;

    auto legal = [&](int cell) {
        auto occ = [&](int c) {
            return c >= 1 && c <= length && (mask >> (c - 1)) & 1;
        };
        return !occ(cell) && !occ(cell - 1) && !occ(cell + 1);
    };

    std::vector<bool> seen;
    for (int cell = 1; cell <= length; ++cell) {
        if (!legal(cell)) continue;
        int g = brute_force_mask(length, mask | (std::uint64_t{1} << (cell - 1)),
                                 table, memo);
        if (g >= static_cast<int>(seen.size())) seen.resize(g + 1, false);
        seen[g] = true;
    }
    int result = mex(seen);
    memo.values.emplace(key, result);
    return result;
}

int brute_force_value(const Board& board, GrundyTable& table, BruteForceMemo& memo) {
    return brute_force_mask(board.length(), board.mask(), table, memo);
}

}  // namespace

GrundyTable::GrundyTable(int max_n) : values_{0} { extend(max_n); }

void GrundyTable::extend(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
    for (int k = static_cast<int>(values_.size()); k <= max_n; ++k) {
        std::vector<bool> seen;
        for (int i = 1; i <= k; ++i) {
            int g = values_[std::max(i - 2, 0)] ^ values_[std::max(k - i - 1, 0)];
            if (g >= static_cast<int>(seen.size())) seen.resize(g + 1, false);
            seen[g] = true;
        }
        values_.push_back(mex(seen));
    }
}

int GrundyTable::value(int n) const {
    if (n < 0 || n > max_n())
        throw std::out_of_range("grundy value " + std::to_string(n) +
                                " outside table [0, " + std::to_string(max_n()) + "]");
    return values_[n];
}

int grundy_free_row(int n, GrundyTable& table) {
    if (n < 0) throw std::invalid_argument("row length must be >= 0");
    table.extend(n);
    return table.value(n);
}

std::vector<int> grundy_sequence(int max_n) {
    GrundyTable table(max_n);
    std::vector<int> seq(max_n + 1);
    for (int k = 0; k <= max_n; ++k) seq[k] = table.value(k);
    return seq;
}

int grundy_board(const Board& board, GrundyMethod method, GrundyTable& table) {
    BruteForceMemo memo;
    return grundy_board(board, method, table, memo);
}

int grundy_board(const Board& board, GrundyMethod method, GrundyTable& table,
                 BruteForceMemo& memo) {
    switch (method) {
        case GrundyMethod::brute_force:
            if (board.length() > 48)
                throw std::invalid_argument("brute force limited to length <= 48");
            return brute_force_value(board, table, memo);
        case GrundyMethod::segment_xor: {
            int acc = 0;
            for (int len : segments_of(board).effective_lengths)
                acc ^= grundy_free_row(len, table);
            return acc;
        }
    }
    throw std::logic_error("unreachable grundy method");
}

char player_char(Player p) { return p == Player::A ? 'A' : 'B'; }

Player winner(int n, GrundyTable& table) {
    return grundy_free_row(n, table) != 0 ? Player::A : Player::B;
}

std::optional<int> optimal_move(const Board& board, GrundyTable& table) {
    if (grundy_board(board, GrundyMethod::segment_xor, table) == 0) return std::nullopt;
    for (int cell : board.legal_moves()) {
        if (grundy_board(board.after(cell), GrundyMethod::segment_xor, table) == 0)
            return cell;
    }
    throw std::logic_error("nonzero position without a value-zero move");
}

int nim_heap_equivalent(int n, GrundyTable& table) { return grundy_free_row(n, table); }

}  // namespace gpv::game
