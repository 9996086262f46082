#ifndef SCHMIDT_SERIES_HPP
#define SCHMIDT_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace schmidt {

using Integer = mpz_class;

/// Exponent vector aligned to a context's variable list.
class Monomial {
 public:
  Monomial() = default;
  /// Throws std::invalid_argument on a negative exponent.
  explicit Monomial(std::vector<int> exponents);

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int exponent(std::size_t variable) const { return exponents_.at(variable); }
  std::size_t arity() const noexcept { return exponents_.size(); }
  bool is_constant() const noexcept;
  int total_degree() const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
};

/// Coefficient times monomial, e.g. -t1*q for the factors of (-t1 q; q)_∞.
struct Term {
  Integer coefficient;
  Monomial monomial;
};

/// The ambient truncated ring: an ordered list of variables drawn from
/// {q, t1, t2, s, z}, each with a maximum exponent. A monomial survives only
/// if every exponent is within its cap, which makes truncation a quotient by a
/// monomial ideal and keeps every coefficient inside the box exact.
class SeriesContext {
 public:
  struct Variable {
    std::string name;
    int cap;
    bool operator==(const Variable&) const = default;
  };

  static constexpr int max_cap = 1023;

  /// Throws std::invalid_argument on unknown or repeated names, more than
  /// five variables, or a cap outside 0..max_cap.
  explicit SeriesContext(std::vector<Variable> variables);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  std::size_t arity() const noexcept { return variables_.size(); }
  int cap(std::size_t variable) const { return variables_.at(variable).cap; }
  bool has(std::string_view name) const noexcept;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index_of(std::string_view name) const;

  /// Monomial from named exponents; omitted variables get exponent 0.
  Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> named) const;
  Monomial monomial(const std::vector<std::pair<std::string, int>>& named) const;
  Monomial one() const { return Monomial(std::vector<int>(arity(), 0)); }
  bool within_caps(const Monomial& m) const;

  /// Packed keys: 12 bits per variable, variable 0 in the low bits.
  using Key = std::uint64_t;
  Key pack(const Monomial& m) const;
  Monomial unpack(Key key) const;
  /// Adds two in-cap keys; false if the sum leaves the box.
  bool add_keys(Key a, Key b, Key& out) const noexcept {
    Key sum = a + b;
    if ((sum + bias_) & overflow_mask_) return false;
    out = sum;
    return true;
  }

  bool operator==(const SeriesContext& other) const { return variables_ == other.variables_; }

  nlohmann::json to_json() const;

 private:
  std::vector<Variable> variables_;
  Key bias_ = 0;
  Key overflow_mask_ = 0;
};

using ContextPtr = std::shared_ptr<const SeriesContext>;

ContextPtr make_context(std::vector<SeriesContext::Variable> variables);

/// Formats a monomial as "q^6*t1*t2^2" ("1" for the constant).
std::string format_monomial(const SeriesContext& ctx, const Monomial& m);
/// Parses "q=6,t1=1,t2=2" into named exponents; omitted names mean 0.
std::vector<std::pair<std::string, int>> parse_named_exponents(std::string_view text);

/// A truncated formal power series with exact integer coefficients.
class Series {
 public:
  explicit Series(ContextPtr ctx);

  static Series constant(ContextPtr ctx, const Integer& value);
  static Series from_term(ContextPtr ctx, const Term& term);
  static Series from_monomial(ContextPtr ctx, const Monomial& m) { return from_term(std::move(ctx), {1, m}); }

  const ContextPtr& context() const noexcept { return ctx_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Exact coefficient; 0 for absent or out-of-cap monomials.
  Integer coefficient(const Monomial& m) const;

  /// Terms in canonical order: total degree ascending, then exponent vectors
  /// in decreasing lexicographic order.
  std::vector<std::pair<Monomial, Integer>> terms() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series& operator*=(const Integer& scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Integer& c) { return a *= c; }
  Series operator-() const;

  /// this · term.
  Series shifted(const Term& term) const;
  /// this · (1 - term).
  Series times_one_minus(const Term& term) const;
  /// this / (1 - term), expanded geometrically. Throws std::invalid_argument
  /// for a constant term.
  Series over_one_minus(const Term& term) const;

  /// Terms whose exponent of `variable` equals `exponent`, with that
  /// exponent reset to 0.
  Series slice(std::size_t variable, int exponent) const;

  struct Substitution;
  /// Sets `variable` to 1, merging coefficients.
  Substitution substitute_one(std::string_view variable) const;

  bool operator==(const Series& other) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void require_same_context(const Series& other) const;
  void drop_zeros();

  ContextPtr ctx_;
  std::map<SeriesContext::Key, Integer> terms_;
};

struct Series::Substitution {
  Series series;
  /// True when some term of the input already reached the cap of the
  /// substituted variable, so terms beyond the truncation may be missing.
  bool reached_cap;
};

/// Σ_{k>=0} term^k up to the caps.
Series geometric_inverse(const ContextPtr& ctx, const Term& term);

/// (z; g)_n = Π_{k<n} (1 - z g^k).
Series poch_finite(const ContextPtr& ctx, const Term& z, const Monomial& g, int n);
/// (z; g)_∞ truncated: factors whose monomial leaves the caps are 1.
/// Throws std::invalid_argument if g is constant.
Series poch_infinite(const ContextPtr& ctx, const Term& z, const Monomial& g);
/// 1 / (z; g)_∞. Throws std::invalid_argument if g or z is constant.
Series poch_infinite_inverse(const ContextPtr& ctx, const Term& z, const Monomial& g);

/// Coefficients of the Gaussian binomial [n choose k] in q, lowest degree
/// first, via [n,k] = [n-1,k-1] + q^k [n-1,k]. Untruncated.
std::vector<Integer> gaussian_binomial_coefficients(int n, int k);

/// [n choose k] as a series in the context's q (truncated).
Series q_binomial(const ContextPtr& ctx, int n, int k);
/// [n; k_1, ..., k_t] as a product of binomials.
Series q_multinomial(const ContextPtr& ctx, int n, const std::vector<int>& parts);

}  // namespace schmidt

#endif  // SCHMIDT_SERIES_HPP
