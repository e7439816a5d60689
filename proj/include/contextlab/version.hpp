#pragma once

namespace contextlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace contextlab
