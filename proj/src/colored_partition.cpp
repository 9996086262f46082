#include "schmidt/colored_partition.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "text_util.hpp"

namespace schmidt {

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
  for (const auto& part : parts_) {
    if (part.size <= 0 || part.color <= 0) {
      throw std::invalid_argument("colored parts need positive size and color");
    }
    size_ += part.size;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string to_string(const ColoredPartition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(p.parts()[k].size);
    out += '_';
    out += std::to_string(p.parts()[k].color);
  }
  return out;
}

ColoredPartition parse_colored_partition(std::string_view text) {
  std::vector<ColoredPart> parts;
  for (auto field : detail::split(text, ',')) {
    auto pieces = detail::split(field, '_');
    if (pieces.size() != 2) {
      throw std::invalid_argument("colored part must look like size_color: '" + std::string(field) + "'");
    }
    parts.push_back({detail::parse_int(pieces[0]), detail::parse_int(pieces[1])});
  }
  return ColoredPartition(std::move(parts));
}

void require_color_rule(const ResidueSet& s, int top) {
  int m = s.modulus();
  if (top != m && top != m + 1) throw std::invalid_argument("color bound must be m or m + 1");
  if (s.largest() >= top) throw std::invalid_argument("index set S must lie below the color bound");
}

ColorRange admissible_colors(int part_size, const ResidueSet& s, int top) {
  int i = s.count();
  int k = (part_size - 1) % i + 1;
  int next = k < i ? s.member(k + 1) : top;
  return {s.member(k), next - 1};
}

bool cs_validate(const ColoredPartition& p, const ResidueSet& s, int top) {
  require_color_rule(s, top);
  return std::all_of(p.parts().begin(), p.parts().end(), [&](const ColoredPart& part) {
    auto range = admissible_colors(part.size, s, top);
    return part.color >= range.first && part.color <= range.last;
  });
}

std::vector<int> color_counts(const ColoredPartition& p, int m) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (const auto& part : p.parts()) {
    if (part.color < 1 || part.color > m) throw std::invalid_argument("color out of range 1..m");
    ++counts[static_cast<std::size_t>(part.color - 1)];
  }
  return counts;
}

namespace {

struct ColoredEnumerator {
  const ResidueSet& s;
  int top;
  const ColoredVisitor& visit;
  std::vector<ColoredPart> buffer;

  void run(int remaining, ColoredPart bound) {
    if (remaining == 0) {
      visit(ColoredPartition(buffer));
      return;
    }
    for (int size = std::min(remaining, bound.size); size >= 1; --size) {
      auto range = admissible_colors(size, s, top);
      int last = size == bound.size ? std::min(range.last, bound.color) : range.last;
      for (int color = last; color >= range.first; --color) {
        buffer.push_back({size, color});
        run(remaining - size, {size, color});
        buffer.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_cs(int n, const ResidueSet& s, int top, const ColoredVisitor& visit) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  require_color_rule(s, top);
  ColoredEnumerator e{s, top, visit, {}};
  e.run(n, {n, INT_MAX});
}

std::vector<ColoredPartition> enumerate_cs(int n, const ResidueSet& s, int top) {
  std::vector<ColoredPartition> out;
  for_each_cs(n, s, top, [&](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

Overpartition::Overpartition(std::vector<OverpartEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const OverpartEntry& a, const OverpartEntry& b) { return a.size > b.size; });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].size <= 0 || entries_[k].count <= 0) {
      throw std::invalid_argument("overpartition entries need positive size and count");
    }
    if (k > 0 && entries_[k].size == entries_[k - 1].size) {
      throw std::invalid_argument("overpartition sizes must be distinct entries");
    }
  }
}

int Overpartition::size() const noexcept {
  int total = 0;
  for (const auto& e : entries_) total += e.size * e.count;
  return total;
}

int Overpartition::length() const noexcept {
  int total = 0;
  for (const auto& e : entries_) total += e.count;
  return total;
}

int Overpartition::overlined_count() const noexcept {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](const OverpartEntry& e) { return e.overlined; }));
}

Partition Overpartition::underlying() const {
  std::vector<int> parts;
  for (const auto& e : entries_) parts.insert(parts.end(), static_cast<std::size_t>(e.count), e.size);
  return Partition(std::move(parts));
}

OverpartitionStats over_stats(const Overpartition& p) { return {p.overlined_count(), p.length()}; }

std::string to_string(const Overpartition& p) {
  std::string out;
  for (const auto& e : p.entries()) {
    for (int c = 0; c < e.count; ++c) {
      if (!out.empty()) out += ',';
      out += std::to_string(e.size);
      if (c == 0 && e.overlined) out += '\'';
    }
  }
  return out;
}

Overpartition parse_overpartition(std::string_view text) {
  std::vector<OverpartEntry> entries;
  for (auto field : detail::split(text, ',')) {
    bool overlined = !field.empty() && field.back() == '\'';
    if (overlined) field.remove_suffix(1);
    int size = detail::parse_int(field);
    if (!entries.empty() && entries.back().size == size) {
      if (overlined) throw std::invalid_argument("only the first occurrence of a size may be overlined");
      ++entries.back().count;
      continue;
    }
    if (!entries.empty() && size > entries.back().size) {
      throw std::invalid_argument("overpartition parts must be weakly decreasing");
    }
    entries.push_back({size, 1, overlined});
  }
  return Overpartition(std::move(entries));
}

namespace {

struct OverpartitionEnumerator {
  const OverpartitionVisitor& visit;
  std::vector<OverpartEntry> buffer;

  void run(int remaining, int below) {
    if (remaining == 0) {
      visit(Overpartition(buffer));
      return;
    }
    for (int size = std::min(remaining, below - 1); size >= 1; --size) {
      for (int count = remaining / size; count >= 1; --count) {
        for (bool overlined : {true, false}) {
          buffer.push_back({size, count, overlined});
          run(remaining - size * count, size);
          buffer.pop_back();
        }
      }
    }
  }
};

}  // namespace

void for_each_overpartition(int n, const OverpartitionVisitor& visit) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
  OverpartitionEnumerator e{visit, {}};
  e.run(n, n + 1);
}

std::vector<Overpartition> enumerate_overpartitions(int n) {
  std::vector<Overpartition> out;
  for_each_overpartition(n, [&](const Overpartition& p) { out.push_back(p); });
  return out;
}

}  // namespace schmidt
