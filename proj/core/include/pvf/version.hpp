#pragma once

namespace pvf {
inline constexpr const char* version = "0.1.0";
}
