#pragma once

namespace qsum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsum
