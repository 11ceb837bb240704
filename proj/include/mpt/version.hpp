#pragma once

namespace mpt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mpt
