#pragma once

namespace covosc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace covosc
