#ifndef SCHMIDT_BIJECTIONS_HPP
#define SCHMIDT_BIJECTIONS_HPP

#include "schmidt/colored_partition.hpp"
#include "schmidt/partition.hpp"

namespace schmidt {

// ---------------------------------------------------------------------------
// Color conjugation Ψ_{m,S}: P -> C_S.
//
// Rows of λ whose index has residue in S are marked. Each column of height h
// becomes one part equal to the number of marked rows in that column; its
// color is s_k + j, where k is the part's residue modulo |S| and j counts the
// unmarked squares at the bottom of the column. Colors range up to m, so the
// image satisfies cs_validate(·, S, m + 1). Size maps to Schmidt weight and the
// number of color-j parts is ρ_j.
// ---------------------------------------------------------------------------

ColoredPartition psi_forward(const Partition& p, const ResidueSet& s);

/// Row index of the p-th marked row (p >= 1).
int marked_row(int p, const ResidueSet& s);

/// Throws std::invalid_argument if the input is not C_S-valid with top m + 1.
Partition psi_inverse(const ColoredPartition& p, const ResidueSet& s);

// ---------------------------------------------------------------------------
// Mork's diagonal-hook map.
//
// For each diagonal cell (d, d) the hook length becomes μ_{2d-1}, and for the
// cell (d, d+1) just above the diagonal, when it exists, μ_{2d}. The image is
// a distinct-part partition with μ_1 + μ_3 + ... = |λ|.
// ---------------------------------------------------------------------------

Partition mork_forward(const Partition& p);

/// Throws std::invalid_argument if μ does not have distinct parts or the
/// peeled arms and legs are not realisable.
Partition mork_inverse(const Partition& distinct);

/// Splits λ into λ^f ∈ F_m and λ^c: every m equal columns of height h are
/// removed from the diagram and replaced by a single part h·m in λ^c.
struct GlaisherSplit {
  Partition reduced;
  Partition removed;
  bool operator==(const GlaisherSplit&) const = default;
};

GlaisherSplit glaisher_reduce(const Partition& p, int m);

/// Inverse of glaisher_reduce. Throws std::invalid_argument if `reduced` is
/// not in F_m or a part of `removed` is not divisible by m.
Partition glaisher_expand(const Partition& reduced, const Partition& removed, int m);

/// Splits the multiset of parts: `restricted` keeps mult(v) mod m copies of
/// each v (so lies in D_m), `repeated` the remaining multiples of m.
struct MultiplicitySplit {
  Partition restricted;
  Partition repeated;
  bool operator==(const MultiplicitySplit&) const = default;
};

MultiplicitySplit decompose_multiplicity(const Partition& p, int m);

/// Multiset union of the parts.
Partition merge_parts(const Partition& a, const Partition& b);

}  // namespace schmidt

#endif  // SCHMIDT_BIJECTIONS_HPP
