#pragma once

namespace hyperres {
inline constexpr const char* kVersion = "0.2.0";
}
