#pragma once

namespace ncho {

inline constexpr const char* version = "0.1.0";

} // namespace ncho
