#pragma once

namespace basel {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace basel
