#pragma once

namespace alleyflow {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace alleyflow
