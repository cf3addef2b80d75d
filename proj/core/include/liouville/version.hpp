#pragma once

namespace liouville {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace liouville
