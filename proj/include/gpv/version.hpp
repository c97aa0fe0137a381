#pragma once

namespace gpv {

inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace gpv
