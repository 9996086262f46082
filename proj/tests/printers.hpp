#ifndef SCHMIDT_TESTS_PRINTERS_HPP
#define SCHMIDT_TESTS_PRINTERS_HPP

// Stream operators so doctest can show values in failed assertions.

#include <ostream>

#include "schmidt/bijections.hpp"
#include "schmidt/colored_partition.hpp"
#include "schmidt/partition.hpp"
#include "schmidt/series.hpp"

namespace schmidt {

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const ColoredPartition& p) {
  return os << '(' << to_string(p) << ')';
}
inline std::ostream& operator<<(std::ostream& os, const Overpartition& p) { return os << '(' << to_string(p) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Repetition& r) {
  return os << r.value << '^' << r.multiplicity;
}
inline std::ostream& operator<<(std::ostream& os, const GlaisherSplit& g) {
  return os << '(' << to_string(g.reduced) << " | " << to_string(g.removed) << ')';
}
inline std::ostream& operator<<(std::ostream& os, const MultiplicitySplit& d) {
  return os << '(' << to_string(d.restricted) << " | " << to_string(d.repeated) << ')';
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const std::vector<T>& v) {
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os << ']';
}

}  // namespace schmidt

#endif  // SCHMIDT_TESTS_PRINTERS_HPP
