#include "gpv/game/period.hpp"

namespace gpv::game {

std::optional<PeriodCertificate> detect_period(std::span<const int> sequence) {
    int len = static_cast<int>(sequence.size());
    for (int period = 1; period <= len - 1; ++period) {
        // Smallest preperiod for this period: one past the last mismatch.
        int preperiod = 0;
        for (int k = len - 1 - period; k >= 0; --k) {
            if (sequence[k] != sequence[k + period]) {
                preperiod = k + 1;
                break;
            }
        }
        int window_end = len - 1 - period;
        if (window_end < preperiod) continue;  // vacuous match
        if (window_end < 2 * preperiod + period + 2) continue;  // window too short
        return PeriodCertificate{preperiod, period, preperiod, window_end};
    }
    return std::nullopt;
}

}  // namespace gpv::game
