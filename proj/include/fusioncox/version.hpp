#pragma once

namespace fusioncox {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fusioncox
