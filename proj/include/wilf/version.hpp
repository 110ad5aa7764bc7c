#pragma once

namespace wilf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wilf
