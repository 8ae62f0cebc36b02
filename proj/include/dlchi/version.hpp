#pragma once

namespace dlchi {

inline constexpr const char* kVersion = "1.0.0";

} // namespace dlchi
