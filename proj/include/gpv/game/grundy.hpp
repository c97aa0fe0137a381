#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gpv/game/board.hpp"

namespace gpv::game {

// Memoized Grundy values g[0..max_n] for free rows. Each move in a free row
// of k cells occupies cell i and deadens its neighbours, leaving independent
// rows of max(i-2, 0) and max(k-i-1, 0) cells, so
//   g[k] = mex over i=1..k of g[max(i-2,0)] XOR g[max(k-i-1,0)].
// Build (extend) from a single writer, then share read-only.
class GrundyTable {
public:
    explicit GrundyTable(int max_n = 0);

    void extend(int max_n);
    int value(int n) const;  // requires 0 <= n <= max_n()
    int max_n() const { return static_cast<int>(values_.size()) - 1; }

private:
    std::vector<int> values_;
};

// g[n], growing the table on demand.
int grundy_free_row(int n, GrundyTable& table);

// g[0..max_n] as a vector.
std::vector<int> grundy_sequence(int max_n);

enum class GrundyMethod { brute_force, segment_xor };

// Shared memo for the brute-force method, keyed on (length, occupied mask).
struct BruteForceMemo {
    std::unordered_map<std::uint64_t, int> values;
};

// Grundy value of an arbitrary board position. brute_force recurses over
// apply-move successors; segment_xor XORs free-row values over the board's
// segments. The two methods agree on every valid board.
int grundy_board(const Board& board, GrundyMethod method, GrundyTable& table);
int grundy_board(const Board& board, GrundyMethod method, GrundyTable& table,
                 BruteForceMemo& memo);

enum class Player { A, B };

char player_char(Player p);

// Winner of the n-cell row under optimal play, A moving first.
Player winner(int n, GrundyTable& table);

// Lowest-index legal move leaving a Grundy-0 position, or nullopt when the
// mover is already lost (every move loses against optimal replies).
std::optional<int> optimal_move(const Board& board, GrundyTable& table);

// Size of the Nim heap the n-cell row is game-equivalent to (that is, g[n]).
int nim_heap_equivalent(int n, GrundyTable& table);

}  // namespace gpv::game
