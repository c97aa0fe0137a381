#pragma once

#include <optional>
#include <span>

namespace gpv::game {

// Eventual periodicity evidence for a Grundy sequence prefix g[0..L-1]:
// g[k + period] == g[k] held for every k in [window_begin, window_end], and
// the window covers the sufficiency range [preperiod, 2*preperiod + period + 2]
// required for the periodicity to persist under this game's 3-cell move span.
struct PeriodCertificate {
    int preperiod = 0;
    int period = 0;
    int window_begin = 0;
    int window_end = 0;

    bool operator==(const PeriodCertificate&) const = default;
};

// Smallest period (then smallest preperiod) whose repetition holds through
// the whole prefix and whose verified window meets the sufficiency bound;
// nullopt when the prefix is too short to certify anything.
std::optional<PeriodCertificate> detect_period(std::span<const int> sequence);

}  // namespace gpv::game
