#pragma once

namespace stableplace {

inline constexpr const char* kToolName = "stableplace";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace stableplace
