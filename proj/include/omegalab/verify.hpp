#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "omegalab/limits.hpp"
#include "omegalab/ring.hpp"

namespace omegalab {

inline constexpr const char* kVersion = "0.1.0";

/// The fixed verification corpus: Z/n for n in 2..16, 24, 30, 36, 60, then
/// Z2xZ2, Z2xZ3, Z4xZ9, F2[x]/(x^2+x+1), F3[x]/(x^2), F2[x]/(x^3+x+1).
std::vector<RingSpec> default_corpus();

struct VerifyOptions {
  Limits limits;
  // Adds a duration_ms field to every check; off by default so that reports
  // stay byte-identical across runs.
  bool timing = false;
};

struct VerifyReport {
  nlohmann::ordered_json json;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

/// Runs every property check on each corpus ring, then the checks on Z.
/// A check that raises an engine error is recorded as failing with the
/// error message as its note.
VerifyReport run_verify(const std::vector<RingSpec>& corpus, const VerifyOptions& options = {});

}  // namespace omegalab
