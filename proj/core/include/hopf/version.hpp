#pragma once

namespace hopf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hopf
