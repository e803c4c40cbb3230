#pragma once

namespace hyperkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hyperkit
