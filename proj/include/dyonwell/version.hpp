#pragma once

namespace dyonwell {
inline constexpr const char* kVersion = "0.1.0";
}
