#pragma once

namespace minorkit {

inline constexpr const char* kToolName = "minorkit";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace minorkit
