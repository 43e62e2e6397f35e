#pragma once

namespace rookery {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "rookery/1";

}
