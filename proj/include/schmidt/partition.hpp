#ifndef SCHMIDT_PARTITION_HPP
#define SCHMIDT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schmidt {

/// A weakly decreasing finite sequence of positive integers.
///
/// Rows are indexed from 1 as in the usual Ferrers-diagram convention;
/// `part(k)` is 0 for every k past the last part.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// every entry is positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts `parts` into decreasing order first; zeros are discarded.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// 1-based row access.
  int part(std::size_t k) const noexcept {
    return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
  }

  /// Sum of the parts.
  int size() const noexcept { return size_; }
  /// Number of parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int value) const noexcept;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Comma-separated decreasing parts, "" for the empty partition.
std::string to_string(const Partition& p);
/// Inverse of to_string. Rejects non-decreasing or non-positive input.
Partition parse_partition(std::string_view text);

/// The index set S of a Schmidt weight, read modulo m with residues in
/// {1, ..., m}. Always contains 1.
class ResidueSet {
 public:
  /// Throws std::invalid_argument if m < 2, `members` is not strictly
  /// ascending, lacks 1, or leaves {1, ..., m}.
  ResidueSet(int modulus, std::vector<int> members);

  /// The common case S = {1, ..., count}.
  static ResidueSet initial_segment(int modulus, int count);

  int modulus() const noexcept { return modulus_; }
  /// i = |S|.
  int count() const noexcept { return static_cast<int>(members_.size()); }
  /// s_k for 1 <= k <= |S|.
  int member(int k) const { return members_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& members() const noexcept { return members_; }
  int largest() const noexcept { return members_.back(); }

  /// Whether row index k (1-based) is counted by the weight.
  bool counts_row(int k) const noexcept { return row_mask_[residue(k) - 1]; }
  /// k reduced into {1, ..., m}.
  int residue(int k) const noexcept { return ((k - 1) % modulus_ + modulus_) % modulus_ + 1; }

  bool operator==(const ResidueSet&) const = default;

 private:
  int modulus_;
  std::vector<int> members_;
  std::vector<bool> row_mask_;
};

std::string to_string(const ResidueSet& s);
/// Parses "1,2,3" against the given modulus.
ResidueSet parse_residue_set(int modulus, std::string_view text);

/// Conjugate (transpose of the Ferrers diagram).
Partition conjugate(const Partition& p);

/// Sum of the rows λ_k whose index k has residue in S.
int schmidt_weight(const Partition& p, const ResidueSet& s);

/// ρ_j = Σ_{k≥0} (λ_{mk+j} - λ_{mk+j+1}) for 1 <= j <= m.
int rho(const Partition& p, int m, int j);

/// Sum of λ_1 - λ_2 + λ_3 - ..., i.e. ρ_1 for m = 2.
inline int alternating_sum(const Partition& p) { return rho(p, 2, 1); }

enum class PartitionClass {
  all,                  ///< P
  bounded_multiplicity, ///< D_m: every part size appears fewer than m times
  bounded_gaps,         ///< F_m: λ_k - λ_{k+1} < m for all k (incl. the last part)
  divisible,            ///< R_m: every part divisible by m
};

PartitionClass parse_partition_class(std::string_view name);
std::string_view to_string(PartitionClass cls);

/// Class membership. The empty partition belongs to every class.
/// Throws std::invalid_argument for m < 2.
bool is_in_class(const Partition& p, PartitionClass cls, int m);

struct Repetition {
  int value;
  int multiplicity;
  bool operator==(const Repetition&) const = default;
  auto operator<=>(const Repetition&) const = default;
};

/// Part sizes repeated at least m times, in decreasing order of value.
std::vector<Repetition> repetition_profile(const Partition& p, int m);

using PartitionVisitor = std::function<void(const Partition&)>;

/// Every partition of n in the given class, in reverse-lexicographic order.
void for_each_partition(int n, PartitionClass cls, int m, const PartitionVisitor& visit);
std::vector<Partition> enumerate_by_size(int n, PartitionClass cls = PartitionClass::all, int m = 2);

/// Every partition with schmidt_weight(λ, S) == n, optionally restricted
/// to parts appearing fewer than `multiplicity_bound` times (0 means no
/// restriction). Order is lexicographically decreasing.
///
/// Finite since 1 ∈ S forces λ_1 <= n and at most m - 1 consecutive rows go
/// uncounted.
void for_each_by_schmidt_weight(int n, const ResidueSet& s, int multiplicity_bound,
                                const PartitionVisitor& visit);

/// `cls` is `all` or `bounded_multiplicity` (D_m with m the modulus of S).
std::vector<Partition> enumerate_by_schmidt_weight(int n, const ResidueSet& s,
                                                   PartitionClass cls = PartitionClass::all);

}  // namespace schmidt

#endif  // SCHMIDT_PARTITION_HPP
