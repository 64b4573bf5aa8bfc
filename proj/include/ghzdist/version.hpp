#pragma once

#include <string_view>

namespace ghzdist {

inline constexpr std::string_view kToolName = "ghzdist";
inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace ghzdist
