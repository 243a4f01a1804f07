#pragma once

namespace weylcurve {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace weylcurve
