#pragma once

namespace matevo {

inline constexpr const char* kToolName = "matevo";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace matevo
