#pragma once

namespace geored {

inline constexpr const char* kVersion = "0.1.0";

} // namespace geored
