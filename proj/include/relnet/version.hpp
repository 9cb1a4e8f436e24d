#pragma once

namespace relnet {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace relnet
