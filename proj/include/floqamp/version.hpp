#pragma once

namespace floqamp {

inline constexpr const char* kArtifactName = "floqamp";
inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace floqamp
