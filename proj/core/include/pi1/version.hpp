#pragma once

namespace pi1 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pi1
