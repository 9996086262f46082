#include "schmidt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace schmidt {

namespace {

void require_modulus(int m) {
  if (m < 2) throw std::invalid_argument("modulus m must be at least 2");
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(p.parts()[k]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  for (auto field : detail::split(text, ',')) parts.push_back(detail::parse_int(field));
  return Partition(std::move(parts));
}

ResidueSet::ResidueSet(int modulus, std::vector<int> members)
    : modulus_(modulus), members_(std::move(members)) {
  require_modulus(modulus_);
  if (members_.empty() || members_.front() != 1) {
    throw std::invalid_argument("index set S must contain 1 as its smallest element");
  }
  for (std::size_t k = 1; k < members_.size(); ++k) {
    if (members_[k] <= members_[k - 1]) {
      throw std::invalid_argument("index set S must be strictly ascending");
    }
  }
  if (members_.back() > modulus_) {
    throw std::invalid_argument("index set S must lie in {1, ..., m}");
  }
  row_mask_.assign(static_cast<std::size_t>(modulus_), false);
  for (int s : members_) row_mask_[static_cast<std::size_t>(s - 1)] = true;
}

ResidueSet ResidueSet::initial_segment(int modulus, int count) {
  if (count < 1) throw std::invalid_argument("initial segment needs at least one index");
  std::vector<int> members(static_cast<std::size_t>(count));
  std::iota(members.begin(), members.end(), 1);
  return ResidueSet(modulus, std::move(members));
}

std::string to_string(const ResidueSet& s) {
  std::string out;
  for (std::size_t k = 0; k < s.members().size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(s.members()[k]);
  }
  return out;
}

ResidueSet parse_residue_set(int modulus, std::string_view text) {
  std::vector<int> members;
  for (auto field : detail::split(text, ',')) members.push_back(detail::parse_int(field));
  return ResidueSet(modulus, std::move(members));
}

Partition conjugate(const Partition& p) {
  std::vector<int> columns(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) ++columns[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(columns));
}

int schmidt_weight(const Partition& p, const ResidueSet& s) {
  int total = 0;
  for (int k = 1; k <= p.length(); ++k) {
    if (s.counts_row(k)) total += p.part(static_cast<std::size_t>(k));
  }
  return total;
}

int rho(const Partition& p, int m, int j) {
  require_modulus(m);
  if (j < 1 || j > m) throw std::invalid_argument("rho index j must lie in 1..m");
  int total = 0;
  for (int k = j; k <= p.length(); k += m) {
    total += p.part(static_cast<std::size_t>(k)) - p.part(static_cast<std::size_t>(k + 1));
  }
  return total;
}

PartitionClass parse_partition_class(std::string_view name) {
  if (name == "P") return PartitionClass::all;
  if (name == "D") return PartitionClass::bounded_multiplicity;
  if (name == "F") return PartitionClass::bounded_gaps;
  if (name == "R") return PartitionClass::divisible;
  throw std::invalid_argument("unknown partition class '" + std::string(name) + "' (expected P, D, F or R)");
}

std::string_view to_string(PartitionClass cls) {
  switch (cls) {
    case PartitionClass::all: return "P";
    case PartitionClass::bounded_multiplicity: return "D";
    case PartitionClass::bounded_gaps: return "F";
    case PartitionClass::divisible: return "R";
  }
  return "?";
}

bool is_in_class(const Partition& p, PartitionClass cls, int m) {
  require_modulus(m);
  const auto& parts = p.parts();
  switch (cls) {
    case PartitionClass::all:
      return true;
    case PartitionClass::bounded_multiplicity: {
      int run = 0;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        run = (k > 0 && parts[k] == parts[k - 1]) ? run + 1 : 1;
        if (run >= m) return false;
      }
      return true;
    }
    case PartitionClass::bounded_gaps:
      for (int k = 1; k <= p.length(); ++k) {
        if (p.part(static_cast<std::size_t>(k)) - p.part(static_cast<std::size_t>(k + 1)) >= m) return false;
      }
      return true;
    case PartitionClass::divisible:
      return std::all_of(parts.begin(), parts.end(), [m](int x) { return x % m == 0; });
  }
  return false;
}

std::vector<Repetition> repetition_profile(const Partition& p, int m) {
  require_modulus(m);
  std::vector<Repetition> out;
  const auto& parts = p.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t end = k;
    while (end < parts.size() && parts[end] == parts[k]) ++end;
    int count = static_cast<int>(end - k);
    if (count >= m) out.push_back({parts[k], count});
    k = end;
  }
  return out;
}

namespace {

struct SizeEnumerator {
  PartitionClass cls;
  int m;
  const PartitionVisitor& visit;
  std::vector<int> buffer;

  void run(int remaining, int cap, int run_length) {
    if (remaining == 0) {
      Partition p(buffer);
      if (cls != PartitionClass::bounded_gaps || is_in_class(p, cls, m)) visit(p);
      return;
    }
    int step = cls == PartitionClass::divisible ? m : 1;
    int top = std::min(cap, remaining);
    if (step > 1) top -= top % step;
    for (int part = top; part >= 1; part -= step) {
      bool repeat = !buffer.empty() && buffer.back() == part;
      int next_run = repeat ? run_length + 1 : 1;
      if (cls == PartitionClass::bounded_multiplicity && next_run >= m) continue;
      buffer.push_back(part);
      run(remaining - part, part, next_run);
      buffer.pop_back();
    }
  }
};

struct WeightEnumerator {
  const ResidueSet& s;
  int bound;
  const PartitionVisitor& visit;
  std::vector<int> buffer;

  // Extensions before the prefix itself gives lexicographically decreasing order.
  void run(int remaining, int cap, int run_length) {
    int row = static_cast<int>(buffer.size()) + 1;
    bool counted = s.counts_row(row);
    if (!(counted && remaining == 0)) {
      int top = counted ? std::min(cap, remaining) : cap;
      for (int part = top; part >= 1; --part) {
        bool repeat = !buffer.empty() && buffer.back() == part;
        int next_run = repeat ? run_length + 1 : 1;
        if (bound > 0 && next_run >= bound) continue;
        buffer.push_back(part);
        run(counted ? remaining - part : remaining, part, next_run);
        buffer.pop_back();
      }
    }
    if (remaining == 0) visit(Partition(buffer));
  }
};

}  // namespace

void for_each_partition(int n, PartitionClass cls, int m, const PartitionVisitor& visit) {
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  if (cls != PartitionClass::all) require_modulus(m);
  SizeEnumerator e{cls, m, visit, {}};
  e.run(n, n, 0);
}

std::vector<Partition> enumerate_by_size(int n, PartitionClass cls, int m) {
  std::vector<Partition> out;
  for_each_partition(n, cls, m, [&](const Partition& p) { out.push_back(p); });
  return out;
}

void for_each_by_schmidt_weight(int n, const ResidueSet& s, int multiplicity_bound,
                                const PartitionVisitor& visit) {
  if (n < 0) throw std::invalid_argument("Schmidt weight must be nonnegative");
  if (multiplicity_bound < 0) throw std::invalid_argument("multiplicity bound must be nonnegative");
  WeightEnumerator e{s, multiplicity_bound, visit, {}};
  // The first row is always counted, so λ_1 <= n.
  e.run(n, n, 0);
}

std::vector<Partition> enumerate_by_schmidt_weight(int n, const ResidueSet& s, PartitionClass cls) {
  int bound = 0;
  if (cls == PartitionClass::bounded_multiplicity) {
    bound = s.modulus();
  } else if (cls != PartitionClass::all) {
    throw std::invalid_argument("Schmidt-weight enumeration supports classes P and D only");
  }
  std::vector<Partition> out;
  for_each_by_schmidt_weight(n, s, bound, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace schmidt
