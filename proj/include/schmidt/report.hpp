#ifndef SCHMIDT_REPORT_HPP
#define SCHMIDT_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

namespace schmidt {

/// First point of disagreement between two sides of a check.
struct Mismatch {
  /// "monomial" for series comparisons, "bucket" for counting checks.
  std::string kind;
  std::string location;
  std::string lhs_side;
  std::string rhs_side;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json caps = nlohmann::json::object();
  bool passed = true;
  std::optional<Mismatch> mismatch;
  /// Check-specific extras (side names, bucket counts, ...).
  nlohmann::json details = nlohmann::json::object();

  void fail(Mismatch m) {
    passed = false;
    if (!mismatch) mismatch = std::move(m);
  }
};

nlohmann::json to_json(const VerificationReport& report);
/// Multi-line human-readable summary; the same numbers as the JSON form.
std::string to_text(const VerificationReport& report);

}  // namespace schmidt

#endif  // SCHMIDT_REPORT_HPP
