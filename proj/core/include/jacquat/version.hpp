#pragma once

namespace jacquat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace jacquat
