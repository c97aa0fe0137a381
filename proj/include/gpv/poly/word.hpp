#pragma once

#include <string>

#include "gpv/poly/geometry.hpp"

namespace gpv::poly {

// Boundary words use 'L' for a 90-degree left turn (a convex corner when
// walking counterclockwise) and 'R' for a 90-degree right turn (a reflex
// corner). Letter i is the turn taken between edge i and edge i+1, with the
// last letter wrapping around to the first edge.

inline bool is_turn_letter(char c) { return c == 'L' || c == 'R'; }

// Direction after turning off `d`; `turn` must be 'L' or 'R'.
Dir apply_turn(Dir d, char turn);

// 'L' or 'R' for perpendicular directions; throws std::invalid_argument for
// parallel ones.
char turn_between(Dir from, Dir to);

char dir_char(Dir d);
Dir dir_from_char(char c);  // throws std::invalid_argument

// Edge directions realized from E using the first n-1 letters (the last
// letter only closes the cycle). Requires valid letters.
std::string steps_from_turns(const std::string& turns);

// Word of the same boundary walked the opposite way round: reversed with L
// and R exchanged.
std::string reverse_complement_turns(const std::string& turns);

// Lexicographically smallest cyclic rotation.
std::string min_rotation(std::string s);

// Representative of the congruence class of the counterclockwise word
// `turns`: the smallest rotation of the word itself (covering rotated
// copies) or of its plain reversal (covering mirror images, whose
// counterclockwise boundary word is the reversal).
std::string canonical_turns(const std::string& turns);

}  // namespace gpv::poly
