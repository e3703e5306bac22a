#pragma once

namespace quanton {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quanton
