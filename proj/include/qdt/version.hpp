#pragma once

namespace qdt {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace qdt
