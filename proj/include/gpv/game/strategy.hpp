#pragma once

#include <functional>
#include <optional>

#include "gpv/game/board.hpp"

namespace gpv::game {

// A deterministic move rule for one player. The rule sees the current board
// and, except on its very first move, the opponent's most recent cell.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual int choose(const Board& board,
                       std::optional<int> last_opponent_move) const = 0;
};

// Centre-then-mirror rule for an odd row length n: open at (n+1)/2, then
// answer the opponent's cell i with cell n+1-i.
class MirrorStrategy final : public Strategy {
public:
    explicit MirrorStrategy(int length);  // throws std::invalid_argument unless odd, >= 1

    int choose(const Board& board, std::optional<int> last_opponent_move) const override;
    int length() const { return length_; }

private:
    int length_;
};

MirrorStrategy mirror_strategy(int n);

enum class Mover { first, second };

// Called after each placement during verification with the resulting board,
// the cell played, and whether the strategy player moved.
using TraversalObserver = std::function<void(const Board&, int cell, bool by_strategy)>;

// Exhaustively plays every opponent line against the strategy on an n-cell
// row and reports whether the strategy player makes the last placement on
// all of them. Memoized on (occupied set, opponent's last move); an illegal
// strategy choice propagates as IllegalMove.
bool verify_strategy(const Strategy& strategy, int n, Mover strategy_player,
                     const TraversalObserver& observer = nullptr);

}  // namespace gpv::game
