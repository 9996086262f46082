#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "schmidt/colored_partition.hpp"
#include "schmidt/identities.hpp"

namespace schmidt {

namespace {

using Count = long long;

std::vector<int> rho_vector(const Partition& p, int m) {
  std::vector<int> out;
  for (int j = 1; j < m; ++j) out.push_back(rho(p, m, j));
  return out;
}

// Color counts for colors 1..m-1 and the color-m parts, largest first.
struct ColoredKey {
  std::vector<int> counts;
  std::vector<int> top_color_parts;
  auto operator<=>(const ColoredKey&) const = default;
};

struct SchmidtKey {
  std::vector<int> rho;
  std::vector<Repetition> repeats;
  auto operator<=>(const SchmidtKey&) const = default;
};

std::string describe(const ColoredKey& key) {
  return fmt::format("colors=({}) color_m_parts=({})", fmt::join(key.counts, ","), fmt::join(key.top_color_parts, ","));
}

std::string describe(const SchmidtKey& key) {
  std::vector<std::string> reps;
  for (const auto& r : key.repeats) reps.push_back(fmt::format("{}^{}", r.value, r.multiplicity));
  return fmt::format("rho=({}) repeats=({})", fmt::join(key.rho, ","), fmt::join(reps, ","));
}

std::string describe(const std::vector<int>& rho_key) { return fmt::format("rho=({})", fmt::join(rho_key, ",")); }

void require_schmidt_default(const ResidueSet& s) {
  if (s.modulus() != 2 || s.count() != 1) {
    throw std::invalid_argument("this counting theorem uses m = 2 and S = {1}");
  }
}

template <typename Key>
void compare_bucket_maps(VerificationReport& report, const std::map<Key, Count>& lhs, const std::map<Key, Count>& rhs,
                         const std::string& lhs_side, const std::string& rhs_side) {
  std::set<Key> keys;
  for (const auto& entry : lhs) keys.insert(entry.first);
  for (const auto& entry : rhs) keys.insert(entry.first);
  for (const auto& key : keys) {
    auto l = lhs.contains(key) ? lhs.at(key) : 0;
    auto r = rhs.contains(key) ? rhs.at(key) : 0;
    if (l != r) report.fail({"bucket", describe(key), lhs_side, rhs_side, std::to_string(l), std::to_string(r)});
  }
  report.details["buckets"] = keys.size();
}

}  // namespace

CountingTheorem parse_counting_theorem(std::string_view name) {
  if (name == "schmidt") return CountingTheorem::schmidt;
  if (name == "uncu") return CountingTheorem::uncu;
  if (name == "ak_main") return CountingTheorem::ak_main;
  if (name == "franklin_ext") return CountingTheorem::franklin_ext;
  throw std::invalid_argument("unknown counting theorem '" + std::string(name) + "'");
}

std::string counting_theorem_name(CountingTheorem theorem) {
  switch (theorem) {
    case CountingTheorem::schmidt: return "schmidt";
    case CountingTheorem::uncu: return "uncu";
    case CountingTheorem::ak_main: return "ak_main";
    case CountingTheorem::franklin_ext: return "franklin_ext";
  }
  return "?";
}

VerificationReport verify_counting(CountingTheorem theorem, const ResidueSet& s, int n, BucketMode mode) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int m = s.modulus();
  VerificationReport report;
  report.theorem = counting_theorem_name(theorem);
  report.params = {{"m", m}, {"S", to_string(s)}, {"n", n}};

  switch (theorem) {
    case CountingTheorem::schmidt:
    case CountingTheorem::uncu: {
      require_schmidt_default(s);
      const bool distinct = theorem == CountingTheorem::schmidt;
      Count weighted = 0;
      for_each_by_schmidt_weight(n, s, distinct ? 2 : 0, [&](const Partition&) { ++weighted; });
      Count target = 0;
      if (distinct) {
        for_each_partition(n, PartitionClass::all, 2, [&](const Partition&) { ++target; });
      } else {
        for_each_cs(n, s, 3, [&](const ColoredPartition&) { ++target; });
      }
      report.details["schmidt_side"] = weighted;
      report.details[distinct ? "partitions" : "two_colored"] = target;
      if (weighted != target) {
        report.fail({"bucket", "total", "schmidt_side", distinct ? "partitions" : "two_colored",
                     std::to_string(weighted), std::to_string(target)});
      }
      return report;
    }
    case CountingTheorem::ak_main: {
      require_color_rule(s, m);
      std::map<std::vector<int>, Count> schmidt_side;
      for_each_by_schmidt_weight(n, s, m, [&](const Partition& p) { ++schmidt_side[rho_vector(p, m)]; });
      std::map<std::vector<int>, Count> colored_side;
      for_each_cs(n, s, m, [&](const ColoredPartition& p) {
        auto counts = color_counts(p, m);
        counts.pop_back();
        ++colored_side[counts];
      });
      compare_bucket_maps(report, schmidt_side, colored_side, "schmidt_side", "colored_side");
      return report;
    }
    case CountingTheorem::franklin_ext: {
      require_color_rule(s, m);
      const int i = s.count();
      report.params["mode"] = mode == BucketMode::fibre ? "fibre" : "literal";

      std::map<SchmidtKey, Count> schmidt_side;
      for_each_by_schmidt_weight(n, s, 0, [&](const Partition& p) {
        ++schmidt_side[{rho_vector(p, m), repetition_profile(p, m)}];
      });
      std::map<ColoredKey, Count> colored_side;
      for_each_cs(n, s, m + 1, [&](const ColoredPartition& p) {
        ColoredKey key;
        key.counts = color_counts(p, m);
        key.counts.pop_back();
        for (const auto& part : p.parts()) {
          if (part.color == m) key.top_color_parts.push_back(part.size);
        }
        ++colored_side[key];
      });

      // α repeated p >= m times becomes ⌊p/m⌋ color-m parts of size i·α.
      auto image = [&](const SchmidtKey& key) {
        ColoredKey out{key.rho, {}};
        for (const auto& r : key.repeats) out.top_color_parts.insert(out.top_color_parts.end(),
                                                                     static_cast<std::size_t>(r.multiplicity / m),
                                                                     i * r.value);
        return out;
      };

      std::map<ColoredKey, Count> pushed_forward;
      std::map<ColoredKey, int> preimages;
      for (const auto& [key, count] : schmidt_side) {
        auto target = image(key);
        pushed_forward[target] += count;
        ++preimages[target];
      }
      int collisions = 0;
      for (const auto& entry : preimages) collisions += entry.second > 1 ? 1 : 0;
      int literal_mismatches = 0;
      std::optional<Mismatch> first_literal;
      for (const auto& [key, count] : schmidt_side) {
        auto target = image(key);
        auto colored = colored_side.contains(target) ? colored_side.at(target) : 0;
        if (colored != count) {
          ++literal_mismatches;
          if (!first_literal) {
            first_literal = Mismatch{"bucket", describe(key) + " -> " + describe(target), "schmidt_side",
                                     "colored_side", std::to_string(count), std::to_string(colored)};
          }
        }
      }
      report.details["schmidt_buckets"] = schmidt_side.size();
      report.details["colored_buckets"] = colored_side.size();
      report.details["colliding_fibres"] = collisions;
      report.details["literal_mismatches"] = literal_mismatches;

      if (mode == BucketMode::fibre) {
        compare_bucket_maps(report, pushed_forward, colored_side, "schmidt_side", "colored_side");
      } else {
        report.details["buckets"] = schmidt_side.size();
        if (first_literal) report.fail(*first_literal);
        for (const auto& [key, count] : colored_side) {
          if (!pushed_forward.contains(key)) {
            report.fail({"bucket", describe(key), "schmidt_side", "colored_side", "0", std::to_string(count)});
          }
        }
      }
      return report;
    }
  }
  throw std::invalid_argument("unknown counting theorem");
}

}  // namespace schmidt
