#pragma once

namespace covertab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace covertab
