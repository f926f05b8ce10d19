#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace omegalab {

enum class CheckStatus { Holds, Fails, Vacuous, Flagged };

std::string_view to_string(CheckStatus status);

// Outcome of one executable property check.
struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::Holds;
  std::optional<nlohmann::ordered_json> witness;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

inline std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Flagged: return "flagged";
  }
  return "?";
}

inline nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = std::string(to_string(status));
  if (witness) j["witness"] = *witness;
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace omegalab
