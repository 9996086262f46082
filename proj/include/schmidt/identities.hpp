#ifndef SCHMIDT_IDENTITIES_HPP
#define SCHMIDT_IDENTITIES_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schmidt/partition.hpp"
#include "schmidt/report.hpp"
#include "schmidt/series.hpp"

namespace schmidt {

enum class IdentityKind {
  ak_trivariate,  ///< 2-colored trivariate sum = 1/((t1 q;q)_∞ (t2 q;q)_∞)
  overpartition,  ///< overpartition sum = (-t1 q;q)_∞ / (t2 q;q)_∞
  cor22,          ///< D_4 Schmidt statistics = overpartition statistics
  mork_odd,       ///< Σ_{D_2} s^|λ| q^{λ1+λ3+...} = 1/(qs; qs^2)_∞
  mork_even,      ///< Σ_{D_2} s^|λ| q^{λ2+λ4+...} = 1/(s; qs^2)_∞
  psi_all,        ///< Σ_P s^|λ| q^{weight, S={1..i}} as a product over r = 1..m
  psi_dm,         ///< the same sum over D_m, r = m factor omitted
};

/// An identity together with its parameters; m and i only matter for the
/// psi variants, where 2 <= m and 1 <= i <= m.
struct IdentityId {
  IdentityKind kind;
  int m = 2;
  int i = 1;
  bool operator==(const IdentityId&) const = default;
};

/// Throws std::invalid_argument for unknown names or invalid psi parameters.
IdentityId make_identity(std::string_view name, int m = 2, int i = 1);
std::string identity_name(IdentityKind kind);

/// Graded by (q, t1, t2) as opposed to (s, q).
bool is_trivariate(IdentityKind kind);

/// The context an identity is verified in. Trivariate identities use
/// (q, t1, t2) all capped at `cap`: every term of these series has t-degree
/// at most its q-degree, so this box covers all t-degrees. The s-graded ones
/// use (s, q), both capped at `cap`, since the q statistic never exceeds |λ|.
ContextPtr identity_context(IdentityKind kind, int cap);

enum class Side { sum, product, enumeration, recurrence, quotient };

Side parse_side(std::string_view name);
std::string side_name(Side side);

/// Sides available for an identity, in comparison order.
std::vector<Side> available_sides(const IdentityId& id);

/// Builds the given side. Throws std::invalid_argument if the identity has
/// no such side.
Series build_side(const IdentityId& id, Side side, const ContextPtr& ctx);

/// Exact minimum, over admissible (j, k), of the numerator q-exponent of the
/// n-th summand (j + k >= n, j, k <= n).
long sum_side_min_exponent(IdentityKind kind, int n);
/// The numerator q-exponent itself.
long sum_side_exponent(IdentityKind kind, int n, int j, int k);

/// The double sums for ak_trivariate and overpartition, in a context
/// containing q, t1 and t2. The n-loop stops at the first n whose minimal
/// numerator exponent exceeds the q cap.
Series sum_side(IdentityKind kind, const ContextPtr& ctx);
Series product_side(const IdentityId& id, const ContextPtr& ctx);
Series enum_side(const IdentityId& id, const ContextPtr& ctx);

/// One combinatorial object contributing a monomial to an enumeration side.
struct EnumeratedObject {
  std::string family;  ///< "colored", "overpartition", "schmidt", "distinct" or "partition"
  std::string text;    ///< serialized object
  Monomial monomial;   ///< may lie outside the caps
};

using EnumerationVisitor = std::function<void(const EnumeratedObject&)>;

/// Visits every object of the given family whose grading lies within the
/// caps' enumeration bound (q cap for weights, s cap for sizes).
void for_each_enumerated(const IdentityId& id, std::string_view family, const ContextPtr& ctx,
                         const EnumerationVisitor& visit);

/// Families contributing to an identity's enumeration sides; cor22 has the
/// Schmidt side first and the overpartition side second.
std::vector<std::string> enumeration_families(const IdentityId& id);

/// All enumerated objects hitting exactly `target`.
std::vector<EnumeratedObject> witnesses(const IdentityId& id, const ContextPtr& ctx, const Monomial& target);

/// L_0, ..., L_n from the recurrence with Q_{2k} = q^k, Q_{2k+1} = t2 q^{k+1}.
std::vector<Series> ln_series_up_to(int n, const ContextPtr& ctx);
Series ln_series(int n, const ContextPtr& ctx);

/// Compares named sides pairwise against the first one.
VerificationReport compare_sides(std::string theorem, const std::vector<std::pair<std::string, Series>>& sides);

/// (z; q)_N against Σ_k (-1)^k z^k q^{k(k-1)/2} [N choose k]. The context
/// must contain z and q.
VerificationReport cauchy_check(int big_n, const ContextPtr& ctx);
/// Context for cauchy_check that truncates nothing.
ContextPtr cauchy_context(int big_n);

/// The t1^J coefficient of the overpartition sum side against its product
/// form q^{J(J+1)/2}/(q;q)_J Σ_m t2^m q^{m^2} / ((q;q)_m (t2 q;q)_m), plus the
/// intermediate form obtained before Cauchy's theorem is applied.
VerificationReport t1_slice_check(int big_j, int q_cap);

/// Recurrence sum Σ_n L_n against the D_4 enumeration, and each L_n against
/// the exactly-n-parts restriction of it.
VerificationReport ln_check(int max_parts, int q_cap);

VerificationReport verify_identity(const IdentityId& id, const ContextPtr& ctx);

enum class CountingTheorem { schmidt, uncu, ak_main, franklin_ext };

CountingTheorem parse_counting_theorem(std::string_view name);
std::string counting_theorem_name(CountingTheorem theorem);

/// How franklin_ext compares buckets. `fibre` sums the Schmidt-side buckets
/// that map to the same colored-side bucket before comparing; `literal`
/// compares every Schmidt-side bucket on its own.
enum class BucketMode { fibre, literal };

/// schmidt and uncu require m = 2, S = {1}; ak_main requires S ⊆ {1..m-1}.
VerificationReport verify_counting(CountingTheorem theorem, const ResidueSet& s, int n,
                                   BucketMode mode = BucketMode::fibre);

}  // namespace schmidt

#endif  // SCHMIDT_IDENTITIES_HPP
