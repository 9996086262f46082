#include "schmidt/identities.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "schmidt/colored_partition.hpp"

namespace schmidt {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

void require_variables(const ContextPtr& ctx, std::initializer_list<std::string_view> names) {
  for (auto name : names) {
    if (!ctx->has(name)) throw std::invalid_argument("context lacks variable '" + std::string(name) + "'");
  }
}

/// series / (z; g)_∞, one geometric factor at a time.
Series divide_by_poch(Series series, const Term& z, const Monomial& g) {
  const auto& ctx = series.context();
  for (Term factor = z; ctx->within_caps(factor.monomial); factor.monomial = factor.monomial * g) {
    series = series.over_one_minus(factor);
  }
  return series;
}

int q_enumeration_bound(const ContextPtr& ctx) { return ctx->cap(ctx->index_of("q")); }
int s_enumeration_bound(const ContextPtr& ctx) { return ctx->cap(ctx->index_of("s")); }

/// Number of part sizes appearing exactly 2 or 3 times.
int doubled_sizes(const Partition& p) {
  int count = 0;
  for (const auto& rep : repetition_profile(p, 2)) {
    if (rep.multiplicity == 2 || rep.multiplicity == 3) ++count;
  }
  return count;
}

int odd_index_sum(const Partition& p) {
  int total = 0;
  for (int k = 1; k <= p.length(); k += 2) total += p.part(static_cast<std::size_t>(k));
  return total;
}

Monomial q_t_monomial(const ContextPtr& ctx, int q, int t1, int t2) {
  return ctx->monomial({{"q", q}, {"t1", t1}, {"t2", t2}});
}

Monomial s_q_monomial(const ContextPtr& ctx, int s, int q) { return ctx->monomial({{"s", s}, {"q", q}}); }

}  // namespace

IdentityId make_identity(std::string_view name, int m, int i) {
  IdentityKind kind;
  if (name == "ak_trivariate") {
    kind = IdentityKind::ak_trivariate;
  } else if (name == "overpartition") {
    kind = IdentityKind::overpartition;
  } else if (name == "cor22") {
    kind = IdentityKind::cor22;
  } else if (name == "mork_odd") {
    kind = IdentityKind::mork_odd;
  } else if (name == "mork_even") {
    kind = IdentityKind::mork_even;
  } else if (name == "psi_all") {
    kind = IdentityKind::psi_all;
  } else if (name == "psi_dm") {
    kind = IdentityKind::psi_dm;
  } else {
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  }
  if (kind == IdentityKind::psi_all || kind == IdentityKind::psi_dm) {
    if (m < 2 || i < 1 || i > m) throw std::invalid_argument("psi identities need m >= 2 and 1 <= i <= m");
    return {kind, m, i};
  }
  return {kind, 2, 1};
}

std::string identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::ak_trivariate: return "ak_trivariate";
    case IdentityKind::overpartition: return "overpartition";
    case IdentityKind::cor22: return "cor22";
    case IdentityKind::mork_odd: return "mork_odd";
    case IdentityKind::mork_even: return "mork_even";
    case IdentityKind::psi_all: return "psi_all";
    case IdentityKind::psi_dm: return "psi_dm";
  }
  return "?";
}

bool is_trivariate(IdentityKind kind) {
  return kind == IdentityKind::ak_trivariate || kind == IdentityKind::overpartition || kind == IdentityKind::cor22;
}

ContextPtr identity_context(IdentityKind kind, int cap) {
  if (is_trivariate(kind)) return make_context({{"q", cap}, {"t1", cap}, {"t2", cap}});
  return make_context({{"s", cap}, {"q", cap}});
}

Side parse_side(std::string_view name) {
  if (name == "sum") return Side::sum;
  if (name == "product") return Side::product;
  if (name == "enum") return Side::enumeration;
  if (name == "recurrence") return Side::recurrence;
  if (name == "quotient") return Side::quotient;
  throw std::invalid_argument("unknown side '" + std::string(name) + "'");
}

std::string side_name(Side side) {
  switch (side) {
    case Side::sum: return "sum";
    case Side::product: return "product";
    case Side::enumeration: return "enum";
    case Side::recurrence: return "recurrence";
    case Side::quotient: return "quotient";
  }
  return "?";
}

std::vector<Side> available_sides(const IdentityId& id) {
  switch (id.kind) {
    case IdentityKind::ak_trivariate:
    case IdentityKind::overpartition:
      return {Side::sum, Side::product, Side::enumeration};
    case IdentityKind::cor22:
      return {Side::enumeration, Side::product, Side::recurrence};
    case IdentityKind::psi_all:
      return {Side::product, Side::enumeration, Side::quotient};
    case IdentityKind::mork_odd:
    case IdentityKind::mork_even:
    case IdentityKind::psi_dm:
      return {Side::product, Side::enumeration};
  }
  return {};
}

long sum_side_exponent(IdentityKind kind, int n, int j, int k) {
  switch (kind) {
    case IdentityKind::ak_trivariate:
      return choose2(n) + choose2(j + 1) + choose2(k + 1);
    case IdentityKind::overpartition:
      return choose2(n) + choose2(k + 1) + static_cast<long>(j) * j - static_cast<long>(n) * j + j;
    default:
      throw std::invalid_argument("identity has no sum side");
  }
}

long sum_side_min_exponent(IdentityKind kind, int n) {
  long best = std::numeric_limits<long>::max();
  for (int j = 0; j <= n; ++j) {
    for (int k = n - j; k <= n; ++k) best = std::min(best, sum_side_exponent(kind, n, j, k));
  }
  return best;
}

Series sum_side(IdentityKind kind, const ContextPtr& ctx) {
  if (kind != IdentityKind::ak_trivariate && kind != IdentityKind::overpartition) {
    throw std::invalid_argument("identity has no sum side");
  }
  require_variables(ctx, {"q", "t1", "t2"});
  const int q_cap = ctx->cap(ctx->index_of("q"));
  const int t1_cap = ctx->cap(ctx->index_of("t1"));
  const int t2_cap = ctx->cap(ctx->index_of("t2"));
  const bool trivariate_denominator = kind == IdentityKind::ak_trivariate;

  Series total(ctx);
  // 1 / ((t1 q;q)_n (t2 q;q)_n (q;q)_n), or without the t1 factor.
  Series denominator = Series::constant(ctx, 1);
  for (int n = 0;; ++n) {
    if (n > 0) {
      denominator = denominator.over_one_minus({1, q_t_monomial(ctx, n, 0, 0)});
      denominator = denominator.over_one_minus({1, q_t_monomial(ctx, n, 0, 1)});
      if (trivariate_denominator) denominator = denominator.over_one_minus({1, q_t_monomial(ctx, n, 1, 0)});
    }
    if (sum_side_min_exponent(kind, n) > q_cap) break;

    Series numerator(ctx);
    for (int j = 0; j <= std::min(n, t1_cap); ++j) {
      for (int k = n - j; k <= std::min(n, t2_cap); ++k) {
        long exponent = sum_side_exponent(kind, n, j, k);
        if (exponent < 0) {
          throw std::logic_error("negative q-exponent in sum side at n=" + std::to_string(n) +
                                 ", j=" + std::to_string(j) + ", k=" + std::to_string(k));
        }
        if (exponent > q_cap) continue;
        Integer sign = (j + k + n) % 2 == 0 ? 1 : -1;
        Series multinomial = q_multinomial(ctx, n, {n - j, n - k, j + k - n});
        numerator += multinomial.shifted({sign, q_t_monomial(ctx, static_cast<int>(exponent), j, k)});
      }
    }
    total += numerator * denominator;
  }
  return total;
}

Series product_side(const IdentityId& id, const ContextPtr& ctx) {
  switch (id.kind) {
    case IdentityKind::ak_trivariate: {
      require_variables(ctx, {"q", "t1", "t2"});
      auto q = q_t_monomial(ctx, 1, 0, 0);
      Series out = divide_by_poch(Series::constant(ctx, 1), {1, q_t_monomial(ctx, 1, 1, 0)}, q);
      return divide_by_poch(std::move(out), {1, q_t_monomial(ctx, 1, 0, 1)}, q);
    }
    case IdentityKind::overpartition:
    case IdentityKind::cor22: {
      require_variables(ctx, {"q", "t1", "t2"});
      auto q = q_t_monomial(ctx, 1, 0, 0);
      Series out = poch_infinite(ctx, {-1, q_t_monomial(ctx, 1, 1, 0)}, q);
      return divide_by_poch(std::move(out), {1, q_t_monomial(ctx, 1, 0, 1)}, q);
    }
    case IdentityKind::mork_odd:
      require_variables(ctx, {"s", "q"});
      return poch_infinite_inverse(ctx, {1, s_q_monomial(ctx, 1, 1)}, s_q_monomial(ctx, 2, 1));
    case IdentityKind::mork_even:
      require_variables(ctx, {"s", "q"});
      return poch_infinite_inverse(ctx, {1, s_q_monomial(ctx, 1, 0)}, s_q_monomial(ctx, 2, 1));
    case IdentityKind::psi_all:
    case IdentityKind::psi_dm: {
      require_variables(ctx, {"s", "q"});
      const int last = id.kind == IdentityKind::psi_all ? id.m : id.m - 1;
      auto base = s_q_monomial(ctx, id.m, id.i);
      Series out = Series::constant(ctx, 1);
      for (int r = 1; r <= last; ++r) {
        out = divide_by_poch(std::move(out), {1, s_q_monomial(ctx, r, std::min(r, id.i))}, base);
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown identity");
}

std::vector<std::string> enumeration_families(const IdentityId& id) {
  switch (id.kind) {
    case IdentityKind::ak_trivariate: return {"colored"};
    case IdentityKind::overpartition: return {"overpartition"};
    case IdentityKind::cor22: return {"schmidt", "overpartition"};
    case IdentityKind::mork_odd:
    case IdentityKind::mork_even: return {"distinct"};
    case IdentityKind::psi_all:
    case IdentityKind::psi_dm: return {"partition"};
  }
  return {};
}

void for_each_enumerated(const IdentityId& id, std::string_view family, const ContextPtr& ctx,
                         const EnumerationVisitor& visit) {
  auto families = enumeration_families(id);
  if (std::find(families.begin(), families.end(), family) == families.end()) {
    throw std::invalid_argument("identity " + identity_name(id.kind) + " has no enumeration family '" +
                                std::string(family) + "'");
  }
  const std::string name(family);
  if (family == "colored") {
    require_variables(ctx, {"q", "t1", "t2"});
    ResidueSet two_colors(2, {1});
    for (int n = 0; n <= q_enumeration_bound(ctx); ++n) {
      for_each_cs(n, two_colors, 3, [&](const ColoredPartition& p) {
        auto counts = color_counts(p, 2);
        visit({name, to_string(p), q_t_monomial(ctx, n, counts[0], counts[1])});
      });
    }
  } else if (family == "overpartition") {
    require_variables(ctx, {"q", "t1", "t2"});
    for (int n = 0; n <= q_enumeration_bound(ctx); ++n) {
      for_each_overpartition(n, [&](const Overpartition& p) {
        auto stats = over_stats(p);
        visit({name, to_string(p), q_t_monomial(ctx, n, stats.overlined, stats.length - stats.overlined)});
      });
    }
  } else if (family == "schmidt") {
    require_variables(ctx, {"q", "t1", "t2"});
    ResidueSet odd_rows(2, {1});
    for (int w = 0; w <= q_enumeration_bound(ctx); ++w) {
      for_each_by_schmidt_weight(w, odd_rows, 4, [&](const Partition& p) {
        visit({name, to_string(p), q_t_monomial(ctx, w, doubled_sizes(p), alternating_sum(p))});
      });
    }
  } else if (family == "distinct") {
    require_variables(ctx, {"s", "q"});
    const bool odd = id.kind == IdentityKind::mork_odd;
    for (int n = 0; n <= s_enumeration_bound(ctx); ++n) {
      for_each_partition(n, PartitionClass::bounded_multiplicity, 2, [&](const Partition& p) {
        int odd_sum = odd_index_sum(p);
        visit({name, to_string(p), s_q_monomial(ctx, n, odd ? odd_sum : n - odd_sum)});
      });
    }
  } else {
    require_variables(ctx, {"s", "q"});
    auto cls = id.kind == IdentityKind::psi_all ? PartitionClass::all : PartitionClass::bounded_multiplicity;
    auto weight_rows = ResidueSet::initial_segment(id.m, id.i);
    for (int n = 0; n <= s_enumeration_bound(ctx); ++n) {
      for_each_partition(n, cls, id.m, [&](const Partition& p) {
        visit({name, to_string(p), s_q_monomial(ctx, n, schmidt_weight(p, weight_rows))});
      });
    }
  }
}

Series enum_side(const IdentityId& id, const ContextPtr& ctx) {
  Series out(ctx);
  std::map<SeriesContext::Key, long> counts;
  for_each_enumerated(id, enumeration_families(id).front(), ctx, [&](const EnumeratedObject& obj) {
    if (ctx->within_caps(obj.monomial)) ++counts[ctx->pack(obj.monomial)];
  });
  for (const auto& [key, count] : counts) out += Series::from_term(ctx, {count, ctx->unpack(key)});
  return out;
}

std::vector<EnumeratedObject> witnesses(const IdentityId& id, const ContextPtr& ctx, const Monomial& target) {
  std::vector<EnumeratedObject> out;
  for (const auto& family : enumeration_families(id)) {
    for_each_enumerated(id, family, ctx, [&](const EnumeratedObject& obj) {
      if (obj.monomial == target) out.push_back(obj);
    });
  }
  return out;
}

std::vector<Series> ln_series_up_to(int n, const ContextPtr& ctx) {
  if (n < 0) throw std::invalid_argument("number of parts must be nonnegative");
  require_variables(ctx, {"q", "t1", "t2"});
  auto big_q = [&](int k) -> Term {
    return {1, k % 2 == 0 ? q_t_monomial(ctx, k / 2, 0, 0) : q_t_monomial(ctx, (k + 1) / 2, 0, 1)};
  };
  const Term t1{1, q_t_monomial(ctx, 0, 1, 0)};

  std::vector<Series> out;
  out.push_back(Series::constant(ctx, 1));
  if (n >= 1) out.push_back(out[0].shifted(big_q(1)).over_one_minus(big_q(1)));
  if (n >= 2) {
    Series equal_pair = Series::from_term(ctx, big_q(2)).shifted(t1).over_one_minus(big_q(2));
    Series distinct_pair = out[1].shifted(big_q(2)).over_one_minus(big_q(2));
    out.push_back(equal_pair + distinct_pair);
  }
  for (int k = 3; k <= n; ++k) {
    auto ku = static_cast<std::size_t>(k);
    Series inner = out[ku - 1] + out[ku - 2].shifted(t1) + out[ku - 3].shifted(t1);
    out.push_back(inner.shifted(big_q(k)).over_one_minus(big_q(k)));
  }
  return out;
}

Series ln_series(int n, const ContextPtr& ctx) { return ln_series_up_to(n, ctx).back(); }

Series build_side(const IdentityId& id, Side side, const ContextPtr& ctx) {
  auto sides = available_sides(id);
  if (std::find(sides.begin(), sides.end(), side) == sides.end()) {
    throw std::invalid_argument("identity " + identity_name(id.kind) + " has no " + side_name(side) + " side");
  }
  switch (side) {
    case Side::sum:
      return sum_side(id.kind, ctx);
    case Side::product:
      return product_side(id, ctx);
    case Side::enumeration:
      return enum_side(id, ctx);
    case Side::recurrence: {
      Series total(ctx);
      for (const auto& ln : ln_series_up_to(2 * q_enumeration_bound(ctx) + 1, ctx)) total += ln;
      return total;
    }
    case Side::quotient: {
      IdentityId restricted{IdentityKind::psi_dm, id.m, id.i};
      auto base = s_q_monomial(ctx, id.m, id.i);
      return divide_by_poch(product_side(restricted, ctx), {1, base}, base);
    }
  }
  throw std::invalid_argument("unknown side");
}

VerificationReport compare_sides(std::string theorem, const std::vector<std::pair<std::string, Series>>& sides) {
  VerificationReport report;
  report.theorem = std::move(theorem);
  auto names = nlohmann::json::array();
  for (const auto& side : sides) names.push_back(side.first);
  report.details["sides"] = names;
  if (sides.empty()) return report;
  const auto& [lhs_name, lhs] = sides.front();
  report.caps = lhs.context()->to_json();
  report.details["terms"] = lhs.term_count();
  for (std::size_t k = 1; k < sides.size(); ++k) {
    const auto& [rhs_name, rhs] = sides[k];
    Series difference = lhs - rhs;
    if (difference.is_zero()) continue;
    const Monomial first = difference.terms().front().first;
    report.fail({"monomial", format_monomial(*lhs.context(), first), lhs_name, rhs_name,
                 lhs.coefficient(first).get_str(), rhs.coefficient(first).get_str()});
  }
  return report;
}

VerificationReport verify_identity(const IdentityId& id, const ContextPtr& ctx) {
  std::vector<std::pair<std::string, Series>> sides;
  for (Side side : available_sides(id)) sides.emplace_back(side_name(side), build_side(id, side, ctx));
  if (id.kind == IdentityKind::cor22) {
    // The overpartition enumeration links the D_4 statistics to the product side.
    sides.emplace_back("overpartition_enum", enum_side({IdentityKind::overpartition, 2, 1}, ctx));
  }
  auto report = compare_sides(identity_name(id.kind), sides);
  if (id.kind == IdentityKind::psi_all || id.kind == IdentityKind::psi_dm) {
    report.params = {{"m", id.m}, {"i", id.i}};
  }
  return report;
}

ContextPtr cauchy_context(int big_n) {
  return make_context({{"z", std::max(big_n, 0)}, {"q", std::max<int>(static_cast<int>(choose2(big_n)), 0)}});
}

VerificationReport cauchy_check(int big_n, const ContextPtr& ctx) {
  require_variables(ctx, {"z", "q"});
  auto z = ctx->monomial({{"z", 1}});
  auto q = ctx->monomial({{"q", 1}});
  Series product = poch_finite(ctx, {1, z}, q, big_n);
  Series sum(ctx);
  for (int k = 0; k <= big_n; ++k) {
    Integer sign = k % 2 == 0 ? 1 : -1;
    auto shift = ctx->monomial({{"z", k}, {"q", static_cast<int>(choose2(k))}});
    sum += q_binomial(ctx, big_n, k).shifted({sign, shift});
  }
  auto report = compare_sides("cauchy", {{"product", product}, {"sum", sum}});
  report.params = {{"N", big_n}};
  return report;
}

VerificationReport t1_slice_check(int big_j, int q_cap) {
  if (big_j < 0) throw std::invalid_argument("slice index J must be nonnegative");
  auto ctx = make_context({{"q", q_cap}, {"t1", big_j}, {"t2", q_cap}});
  auto mono = [&](int q, int t2) { return q_t_monomial(ctx, q, 0, t2); };

  Series slice = sum_side(IdentityKind::overpartition, ctx).slice(ctx->index_of("t1"), big_j);

  // q^{J(J+1)/2} / (q;q)_J
  Series prefactor = Series::from_monomial(ctx, mono(static_cast<int>(choose2(big_j + 1)), 0));
  for (int k = 1; k <= big_j; ++k) prefactor = prefactor.over_one_minus({1, mono(k, 0)});

  Series product_form(ctx);
  for (int m = 0; m * m <= q_cap; ++m) {
    Series term = Series::from_monomial(ctx, mono(m * m, m));
    for (int k = 1; k <= m; ++k) term = term.over_one_minus({1, mono(k, 0)}).over_one_minus({1, mono(k, 1)});
    product_form += term;
  }
  product_form *= prefactor;

  // Σ_n t2^n q^{n^2} (t2 q^{n+1}; q)_J / ((t2 q;q)_{n+J} (q;q)_n), before Cauchy's theorem collapses it.
  Series before_cauchy(ctx);
  for (int n = 0; n * n <= q_cap; ++n) {
    Series term = Series::from_monomial(ctx, mono(n * n, n));
    term *= poch_finite(ctx, {1, mono(n + 1, 1)}, mono(1, 0), big_j);
    for (int k = 1; k <= n + big_j; ++k) term = term.over_one_minus({1, mono(k, 1)});
    for (int k = 1; k <= n; ++k) term = term.over_one_minus({1, mono(k, 0)});
    before_cauchy += term;
  }
  before_cauchy *= prefactor;

  auto report = compare_sides("t1_slice", {{"sum_slice", slice}, {"product_slice", product_form},
                                           {"before_cauchy", before_cauchy}});
  report.params = {{"J", big_j}};
  return report;
}

VerificationReport ln_check(int max_parts, int q_cap) {
  auto ctx = identity_context(IdentityKind::cor22, q_cap);
  auto ln = ln_series_up_to(std::max(max_parts, 2 * q_cap + 1), ctx);

  std::vector<Series> by_length(ln.size(), Series(ctx));
  Series enumeration(ctx);
  ResidueSet odd_rows(2, {1});
  for (int w = 0; w <= q_cap; ++w) {
    for_each_by_schmidt_weight(w, odd_rows, 4, [&](const Partition& p) {
      Series term = Series::from_monomial(ctx, q_t_monomial(ctx, w, doubled_sizes(p), alternating_sum(p)));
      enumeration += term;
      if (static_cast<std::size_t>(p.length()) < by_length.size()) by_length[static_cast<std::size_t>(p.length())] += term;
    });
  }

  Series recurrence_total(ctx);
  for (const auto& series : ln) recurrence_total += series;
  auto report = compare_sides("ln_recurrence", {{"recurrence_sum", recurrence_total}, {"enum", enumeration}});
  for (int n = 0; n <= max_parts; ++n) {
    auto part = compare_sides("ln_recurrence", {{"L_" + std::to_string(n), ln[static_cast<std::size_t>(n)]},
                                                {"enum_parts_" + std::to_string(n), by_length[static_cast<std::size_t>(n)]}});
    if (!part.passed) report.fail(*part.mismatch);
  }
  report.params = {{"max_parts", max_parts}};
  return report;
}

}  // namespace schmidt
