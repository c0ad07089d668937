#pragma once

// One JSON object per line describing a verification run. Field order is
// fixed so files are byte-stable across runs and thread counts.

#include <string>

#include "fracpart/congruence.hpp"

namespace fracpart {

inline constexpr const char* kArtifactVersion = "0.1.0";

std::string certificate_line(const VerificationReport& report);

}  // namespace fracpart
