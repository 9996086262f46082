#include "schmidt/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace schmidt {

int marked_row(int p, const ResidueSet& s) {
  if (p < 1) throw std::invalid_argument("marked row index must be positive");
  int i = s.count();
  return s.modulus() * ((p - 1) / i) + s.member((p - 1) % i + 1);
}

ColoredPartition psi_forward(const Partition& p, const ResidueSet& s) {
  const int m = s.modulus();
  const int i = s.count();
  std::vector<ColoredPart> parts;
  const Partition columns = conjugate(p);
  for (int height : columns.parts()) {
    int blocks = height / m;
    int rest = height % m;
    int below = static_cast<int>(std::upper_bound(s.members().begin(), s.members().end(), rest) -
                                 s.members().begin());
    int marked = blocks * i + below;
    // 1 ∈ S, so every nonempty column contains a marked row and marked >= 1.
    int last_marked = marked_row(marked, s);
    int unmarked_tail = height - last_marked;
    int k = (marked - 1) % i + 1;
    parts.push_back({marked, s.member(k) + unmarked_tail});
  }
  return ColoredPartition(std::move(parts));
}

Partition psi_inverse(const ColoredPartition& p, const ResidueSet& s) {
  const int i = s.count();
  const int top = s.modulus() + 1;
  std::vector<int> heights;
  heights.reserve(p.parts().size());
  for (const auto& part : p.parts()) {
    auto range = admissible_colors(part.size, s, top);
    if (part.color < range.first || part.color > range.last) {
      throw std::invalid_argument("color " + std::to_string(part.color) + " is not admissible for part " +
                                  std::to_string(part.size));
    }
    int k = (part.size - 1) % i + 1;
    heights.push_back(marked_row(part.size, s) + part.color - s.member(k));
  }
  return conjugate(Partition::from_unsorted(std::move(heights)));
}

Partition mork_forward(const Partition& p) {
  Partition columns = conjugate(p);
  std::vector<int> hooks;
  for (int d = 1; p.part(static_cast<std::size_t>(d)) >= d; ++d) {
    auto row = p.part(static_cast<std::size_t>(d));
    hooks.push_back(row + columns.part(static_cast<std::size_t>(d)) - 2 * d + 1);
    if (row >= d + 1) hooks.push_back(row + columns.part(static_cast<std::size_t>(d + 1)) - 2 * d);
  }
  return Partition(std::move(hooks));
}

Partition mork_inverse(const Partition& distinct) {
  if (!is_in_class(distinct, PartitionClass::bounded_multiplicity, 2)) {
    throw std::invalid_argument("Mork inverse needs a partition with distinct parts");
  }
  const int length = distinct.length();
  if (length == 0) return {};
  const int durfee = (length + 1) / 2;
  auto mu = [&](int k) { return distinct.part(static_cast<std::size_t>(k)); };

  // arm[d] = λ_d - d and leg[d] = λ'_d - d, peeled from the innermost hook out.
  std::vector<int> arm(static_cast<std::size_t>(durfee + 1)), leg(static_cast<std::size_t>(durfee + 2));
  arm[durfee] = length % 2 == 0 ? mu(2 * durfee) : 0;
  leg[durfee] = mu(2 * durfee - 1) - arm[durfee] - 1;
  for (int d = durfee - 1; d >= 1; --d) {
    arm[d] = mu(2 * d) - leg[d + 1] - 1;
    leg[d] = mu(2 * d - 1) - arm[d] - 1;
  }
  auto not_in_image = [&] {
    return std::invalid_argument("partition " + to_string(distinct) + " is not in the image of Mork's map");
  };
  if (arm[durfee] < 0 || leg[durfee] < 0) throw not_in_image();
  for (int d = 1; d < durfee; ++d) {
    if (arm[d] <= arm[d + 1] || leg[d] <= leg[d + 1]) throw not_in_image();
  }

  std::vector<int> rows;
  for (int d = 1; d <= durfee; ++d) rows.push_back(arm[d] + d);
  for (int r = durfee + 1; r <= leg[1] + 1; ++r) {
    int width = 0;
    for (int d = 1; d <= durfee; ++d) {
      if (leg[d] + d >= r) ++width;
    }
    rows.push_back(width);
  }
  Partition result(std::move(rows));
  if (mork_forward(result) != distinct) throw not_in_image();
  return result;
}

GlaisherSplit glaisher_reduce(const Partition& p, int m) {
  if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
  const Partition columns = conjugate(p);
  const auto& heights = columns.parts();
  std::vector<int> kept;
  std::vector<int> removed;
  for (std::size_t k = 0; k < heights.size();) {
    std::size_t end = k;
    while (end < heights.size() && heights[end] == heights[k]) ++end;
    int count = static_cast<int>(end - k);
    kept.insert(kept.end(), static_cast<std::size_t>(count % m), heights[k]);
    removed.insert(removed.end(), static_cast<std::size_t>(count / m), heights[k] * m);
    k = end;
  }
  return {conjugate(Partition(std::move(kept))), Partition(std::move(removed))};
}

Partition glaisher_expand(const Partition& reduced, const Partition& removed, int m) {
  if (!is_in_class(reduced, PartitionClass::bounded_gaps, m)) {
    throw std::invalid_argument("reduced partition must lie in F_m");
  }
  if (!is_in_class(removed, PartitionClass::divisible, m)) {
    throw std::invalid_argument("removed parts must be divisible by m");
  }
  std::vector<int> heights = conjugate(reduced).parts();
  for (int part : removed.parts()) heights.insert(heights.end(), static_cast<std::size_t>(m), part / m);
  return conjugate(Partition::from_unsorted(std::move(heights)));
}

MultiplicitySplit decompose_multiplicity(const Partition& p, int m) {
  if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
  std::vector<int> restricted;
  std::vector<int> repeated;
  const auto& parts = p.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t end = k;
    while (end < parts.size() && parts[end] == parts[k]) ++end;
    auto count = end - k;
    auto leftover = count % static_cast<std::size_t>(m);
    restricted.insert(restricted.end(), leftover, parts[k]);
    repeated.insert(repeated.end(), count - leftover, parts[k]);
    k = end;
  }
  return {Partition(std::move(restricted)), Partition(std::move(repeated))};
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace schmidt
