#pragma once

namespace dicke {

inline constexpr const char* kProjectName = "dicke-echo";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace dicke
