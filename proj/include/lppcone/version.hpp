#pragma once

namespace lppcone {

inline constexpr const char* kVersion = "0.1.0";

}
