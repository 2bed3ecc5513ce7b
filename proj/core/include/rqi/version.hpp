#pragma once

namespace rqi {

inline constexpr const char* kVersion = "0.1.0";

} // namespace rqi
