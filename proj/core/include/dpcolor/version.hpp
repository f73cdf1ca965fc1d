#pragma once

namespace dpc {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dpc
