#pragma once

namespace neorl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace neorl
