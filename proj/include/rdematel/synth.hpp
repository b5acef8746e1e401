#pragma once

#include <cstdint>

#include "rdematel/study.hpp"

namespace rdematel {

struct SynthOptions {
  int criteria = 7;
  int experts = 21;
  std::uint64_t seed = 1;
  /// Every expert submits the same matrix.
  bool unanimous = false;
  Scale scale;
};

/// Raw-mode bundle with random scale-valid expert matrices. Deterministic
/// for a given seed.
StudyBundle synthesize_bundle(const SynthOptions& opts);

}  // namespace rdematel
