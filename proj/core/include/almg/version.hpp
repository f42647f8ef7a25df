#pragma once

namespace almg {
inline constexpr const char* kVersion = "0.1.0";
}
