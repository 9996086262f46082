#include "schmidt/report.hpp"

#include <fmt/format.h>

namespace schmidt {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json out{{"theorem", report.theorem},
                     {"params", report.params},
                     {"caps", report.caps},
                     {"status", report.passed ? "pass" : "fail"}};
  if (report.mismatch) {
    const auto& m = *report.mismatch;
    out["mismatch"] = {{m.kind, m.location},
                       {"lhs_side", m.lhs_side},
                       {"rhs_side", m.rhs_side},
                       {"lhs", m.lhs},
                       {"rhs", m.rhs}};
  }
  if (!report.details.empty()) out["details"] = report.details;
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::string out = fmt::format("{}: {}\n", report.theorem, report.passed ? "pass" : "FAIL");
  if (!report.params.empty()) out += fmt::format("  params: {}\n", report.params.dump());
  if (!report.caps.empty()) out += fmt::format("  caps: {}\n", report.caps.dump());
  for (const auto& [key, value] : report.details.items()) {
    out += fmt::format("  {}: {}\n", key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  if (report.mismatch) {
    const auto& m = *report.mismatch;
    out += fmt::format("  first mismatch at {} {}: {} = {}, {} = {}\n", m.kind, m.location, m.lhs_side, m.lhs,
                       m.rhs_side, m.rhs);
  }
  return out;
}

}  // namespace schmidt
