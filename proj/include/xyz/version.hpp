#pragma once

namespace xyz {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace xyz
