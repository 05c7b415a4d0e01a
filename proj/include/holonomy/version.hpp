#pragma once

namespace holonomy {

inline constexpr const char* kVersionString = "0.1.0";

}  // namespace holonomy
