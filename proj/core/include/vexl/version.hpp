#pragma once

namespace vexl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vexl
