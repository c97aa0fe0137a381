#include "gpv/game/strategy.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gpv::game {

MirrorStrategy::MirrorStrategy(int length) : length_(length) {
    if (length < 1 || length % 2 == 0)
        throw std::invalid_argument("mirror strategy needs an odd length >= 1, got " +
                                    std::to_string(length));
}

int MirrorStrategy::choose(const Board& board,
                           std::optional<int> last_opponent_move) const {
    if (board.length() != length_)
        throw std::invalid_argument("mirror strategy built for length " +
                                    std::to_string(length_));
    if (!last_opponent_move) return (length_ + 1) / 2;
    return length_ + 1 - *last_opponent_move;
}

MirrorStrategy mirror_strategy(int n) { return MirrorStrategy(n); }

namespace {

// Traversal with the strategy player's choices fixed and every opponent move
// branched. Results are memoized per occupied mask (plus the opponent's last
// move on strategy turns, since the rule may depend on it).
class Verifier {
public:
    Verifier(const Strategy& strategy, const TraversalObserver& observer)
        : strategy_(strategy), observer_(observer) {}

    bool strategy_turn(const Board& board, std::optional<int> last_opp) {
        if (!board.has_legal_move()) return false;  // strategy cannot place last
        std::uint64_t key = (static_cast<std::uint64_t>(last_opp.value_or(0)) << 48) |
                            board.mask();
        if (auto it = memo_strategy_.find(key); it != memo_strategy_.end())
            return it->second;
        int cell = strategy_.choose(board, last_opp);
        Board next = board.after(cell);  // throws IllegalMove on a broken strategy
        if (observer_) observer_(next, cell, true);
        bool result = opponent_turn(next, true);
        memo_strategy_.emplace(key, result);
        return result;
    }

    bool opponent_turn(const Board& board, bool strategy_placed_last) {
        auto moves = board.legal_moves();
        if (moves.empty()) return strategy_placed_last;
        std::uint64_t key = board.mask();
        if (auto it = memo_opponent_.find(key); it != memo_opponent_.end())
            return it->second;
        bool all_win = true;
        for (int cell : moves) {
            Board next = board.after(cell);
            if (observer_) observer_(next, cell, false);
            if (!strategy_turn(next, cell)) {
                all_win = false;
                break;
            }
        }
        memo_opponent_.emplace(key, all_win);
        return all_win;
    }

private:
    const Strategy& strategy_;
    const TraversalObserver& observer_;
    std::unordered_map<std::uint64_t, bool> memo_strategy_;
    std::unordered_map<std::uint64_t, bool> memo_opponent_;
};

}  // namespace

bool verify_strategy(const Strategy& strategy, int n, Mover strategy_player,
                     const TraversalObserver& observer) {
    if (n < 0) throw std::invalid_argument("row length must be >= 0");
    Verifier verifier(strategy, observer);
    Board empty(n);
    if (strategy_player == Mover::first)
        return verifier.strategy_turn(empty, std::nullopt);
    return verifier.opponent_turn(empty, false);
}

}  // namespace gpv::game
