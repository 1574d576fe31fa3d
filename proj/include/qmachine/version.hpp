#pragma once

namespace qmachine {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qmachine
