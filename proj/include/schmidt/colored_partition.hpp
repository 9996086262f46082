#ifndef SCHMIDT_COLORED_PARTITION_HPP
#define SCHMIDT_COLORED_PARTITION_HPP

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

struct ColoredPart {
  int size;
  int color;
  bool operator==(const ColoredPart&) const = default;
  auto operator<=>(const ColoredPart&) const = default;
};

/// A multiset of colored parts kept in canonical order: size descending,
/// then color descending.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  /// Sorts into canonical order. Throws std::invalid_argument on a
  /// non-positive size or color.
  explicit ColoredPartition(std::vector<ColoredPart> parts);

  const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  bool operator==(const ColoredPartition&) const = default;
  std::strong_ordering operator<=>(const ColoredPartition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<ColoredPart> parts_;
  int size_ = 0;
};

/// "7_1,6_5,6_4".
std::string to_string(const ColoredPartition& p);
ColoredPartition parse_colored_partition(std::string_view text);

/// The admissible color range for parts of a given size in C_S: a part whose
/// residue modulo |S| is k (taken in 1..|S|) may take colors s_k .. s_{k+1}-1,
/// with s_{|S|+1} = top.
struct ColorRange {
  int first;
  int last;
};

/// `top` must be m or m + 1; with top == m the set S may not contain m.
/// Throws std::invalid_argument otherwise.
void require_color_rule(const ResidueSet& s, int top);
ColorRange admissible_colors(int part_size, const ResidueSet& s, int top);

bool cs_validate(const ColoredPartition& p, const ResidueSet& s, int top);

/// Entry j - 1 counts parts of color j. Throws std::invalid_argument for a
/// color outside 1..m.
std::vector<int> color_counts(const ColoredPartition& p, int m);

using ColoredVisitor = std::function<void(const ColoredPartition&)>;

/// All C_S-admissible colored partitions of n, in decreasing canonical order.
void for_each_cs(int n, const ResidueSet& s, int top, const ColoredVisitor& visit);
std::vector<ColoredPartition> enumerate_cs(int n, const ResidueSet& s, int top);

/// One distinct part size of an overpartition. Only the first occurrence of a
/// size can carry the overline, so a single flag per size suffices.
struct OverpartEntry {
  int size;
  int count;
  bool overlined;
  bool operator==(const OverpartEntry&) const = default;
};

class Overpartition {
 public:
  Overpartition() = default;
  /// Entries are sorted by size descending. Throws std::invalid_argument on
  /// duplicate sizes or non-positive sizes/counts.
  explicit Overpartition(std::vector<OverpartEntry> entries);

  const std::vector<OverpartEntry>& entries() const noexcept { return entries_; }
  int size() const noexcept;
  int length() const noexcept;
  int overlined_count() const noexcept;

  /// Forget the overlines.
  Partition underlying() const;

  bool operator==(const Overpartition&) const = default;

 private:
  std::vector<OverpartEntry> entries_;
};

struct OverpartitionStats {
  int overlined;
  int length;
  bool operator==(const OverpartitionStats&) const = default;
};

/// (o(μ), ℓ(μ)).
OverpartitionStats over_stats(const Overpartition& p);

/// "3',2,1'" with the apostrophe on the first copy of an overlined size.
std::string to_string(const Overpartition& p);
Overpartition parse_overpartition(std::string_view text);

using OverpartitionVisitor = std::function<void(const Overpartition&)>;
void for_each_overpartition(int n, const OverpartitionVisitor& visit);
std::vector<Overpartition> enumerate_overpartitions(int n);

}  // namespace schmidt

#endif  // SCHMIDT_COLORED_PARTITION_HPP
