#include "gpv/poly/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gpv::poly {

Dir apply_turn(Dir d, char turn) {
    if (turn == 'L') return rotate_ccw(d, 1);
    if (turn == 'R') return rotate_ccw(d, -1);
    throw std::invalid_argument(std::string("turn letter must be L or R, got '") +
                                turn + "'");
}

char turn_between(Dir from, Dir to) {
    if (rotate_ccw(from, 1) == to) return 'L';
    if (rotate_ccw(from, -1) == to) return 'R';
    throw std::invalid_argument("directions are not perpendicular");
}

char dir_char(Dir d) {
    switch (d) {
        case Dir::E: return 'E';
        case Dir::N: return 'N';
        case Dir::W: return 'W';
        default: return 'S';
    }
}

Dir dir_from_char(char c) {
    switch (c) {
        case 'E': return Dir::E;
        case 'N': return Dir::N;
        case 'W': return Dir::W;
        case 'S': return Dir::S;
        default:
            throw std::invalid_argument(
                std::string("step letter must be one of ENWS, got '") + c + "'");
    }
}

std::string steps_from_turns(const std::string& turns) {
    std::string steps;
    steps.reserve(turns.size());
    Dir d = Dir::E;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        steps.push_back(dir_char(d));
        if (i + 1 < turns.size()) d = apply_turn(d, turns[i]);
    }
    return steps;
}

std::string reverse_complement_turns(const std::string& turns) {
    std::string out(turns.rbegin(), turns.rend());
    for (char& c : out) c = (c == 'L') ? 'R' : 'L';
    return out;
}

std::string min_rotation(std::string s) {
    if (s.empty()) return s;
    std::string best = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        if (s < best) best = s;
    }
    return best;
}

std::string canonical_turns(const std::string& turns) {
    std::string reversed(turns.rbegin(), turns.rend());
    return std::min(min_rotation(turns), min_rotation(reversed));
}

}  // namespace gpv::poly
