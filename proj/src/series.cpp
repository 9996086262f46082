#include "schmidt/series.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "text_util.hpp"

namespace schmidt {

namespace {

constexpr int lane_bits = 12;
constexpr SeriesContext::Key lane_mask = (SeriesContext::Key{1} << lane_bits) - 1;
constexpr std::array<std::string_view, 5> known_variables{"q", "t1", "t2", "s", "z"};

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  }
}

bool Monomial::is_constant() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exponents_.size() != exponents_.size()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<int> out(exponents_.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = exponents_[v] + other.exponents_[v];
  return Monomial(std::move(out));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  std::vector<int> out(exponents_);
  for (int& e : out) e *= k;
  return Monomial(std::move(out));
}

SeriesContext::SeriesContext(std::vector<Variable> variables) : variables_(std::move(variables)) {
  if (variables_.size() > known_variables.size()) throw std::invalid_argument("too many series variables");
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    const auto& var = variables_[v];
    if (std::find(known_variables.begin(), known_variables.end(), var.name) == known_variables.end()) {
      throw std::invalid_argument("unknown series variable '" + var.name + "'");
    }
    for (std::size_t w = 0; w < v; ++w) {
      if (variables_[w].name == var.name) throw std::invalid_argument("repeated series variable '" + var.name + "'");
    }
    if (var.cap < 0 || var.cap > max_cap) {
      throw std::invalid_argument("cap for '" + var.name + "' must lie in 0.." + std::to_string(max_cap));
    }
    auto shift = static_cast<unsigned>(v * lane_bits);
    bias_ |= static_cast<Key>(2047 - var.cap) << shift;
    overflow_mask_ |= Key{1} << (shift + 11);
  }
}

bool SeriesContext::has(std::string_view name) const noexcept {
  return std::any_of(variables_.begin(), variables_.end(), [&](const Variable& v) { return v.name == name; });
}

std::size_t SeriesContext::index_of(std::string_view name) const {
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (variables_[v].name == name) return v;
  }
  throw std::invalid_argument("variable '" + std::string(name) + "' is not in this series context");
}

Monomial SeriesContext::monomial(std::initializer_list<std::pair<std::string_view, int>> named) const {
  std::vector<int> exps(arity(), 0);
  for (const auto& [name, e] : named) exps[index_of(name)] += e;
  return Monomial(std::move(exps));
}

Monomial SeriesContext::monomial(const std::vector<std::pair<std::string, int>>& named) const {
  std::vector<int> exps(arity(), 0);
  for (const auto& [name, e] : named) exps[index_of(name)] += e;
  return Monomial(std::move(exps));
}

bool SeriesContext::within_caps(const Monomial& m) const {
  if (m.arity() != arity()) throw std::invalid_argument("monomial arity does not match the context");
  for (std::size_t v = 0; v < arity(); ++v) {
    if (m.exponent(v) > variables_[v].cap) return false;
  }
  return true;
}

SeriesContext::Key SeriesContext::pack(const Monomial& m) const {
  if (!within_caps(m)) throw std::invalid_argument("monomial exceeds the context caps");
  Key key = 0;
  for (std::size_t v = 0; v < arity(); ++v) {
    key |= static_cast<Key>(m.exponent(v)) << static_cast<unsigned>(v * lane_bits);
  }
  return key;
}

Monomial SeriesContext::unpack(Key key) const {
  std::vector<int> exps(arity());
  for (std::size_t v = 0; v < arity(); ++v) {
    exps[v] = static_cast<int>((key >> static_cast<unsigned>(v * lane_bits)) & lane_mask);
  }
  return Monomial(std::move(exps));
}

nlohmann::json SeriesContext::to_json() const {
  auto vars = nlohmann::json::array();
  for (const auto& v : variables_) vars.push_back({{"name", v.name}, {"cap", v.cap}});
  return vars;
}

ContextPtr make_context(std::vector<SeriesContext::Variable> variables) {
  return std::make_shared<const SeriesContext>(std::move(variables));
}

std::string format_monomial(const SeriesContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < ctx.arity(); ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.variables()[v].name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::pair<std::string, int>> parse_named_exponents(std::string_view text) {
  std::vector<std::pair<std::string, int>> out;
  for (auto field : detail::split(text, ',')) {
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("monomial entries must look like var=exponent: '" + std::string(field) + "'");
    }
    int e = detail::parse_int(field.substr(eq + 1));
    if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    out.emplace_back(std::string(detail::trim(field.substr(0, eq))), e);
  }
  return out;
}

Series::Series(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("series needs a context");
}

Series Series::constant(ContextPtr ctx, const Integer& value) {
  Series out(std::move(ctx));
  if (value != 0) out.terms_.emplace(0, value);
  return out;
}

Series Series::from_term(ContextPtr ctx, const Term& term) {
  Series out(std::move(ctx));
  if (term.coefficient != 0 && out.ctx_->within_caps(term.monomial)) {
    out.terms_.emplace(out.ctx_->pack(term.monomial), term.coefficient);
  }
  return out;
}

Integer Series::coefficient(const Monomial& m) const {
  if (!ctx_->within_caps(m)) return 0;
  auto it = terms_.find(ctx_->pack(m));
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::pair<Monomial, Integer>> Series::terms() const {
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(ctx_->unpack(key), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = a.first.total_degree();
    int db = b.first.total_degree();
    if (da != db) return da < db;
    return a.first.exponents() > b.first.exponents();
  });
  return out;
}

void Series::require_same_context(const Series& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw std::invalid_argument("series belong to different contexts");
  }
}

void Series::drop_zeros() {
  std::erase_if(terms_, [](const auto& entry) { return entry.second == 0; });
}

Series& Series::operator+=(const Series& other) {
  require_same_context(other);
  for (const auto& [key, c] : other.terms_) terms_[key] += c;
  drop_zeros();
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_context(other);
  for (const auto& [key, c] : other.terms_) terms_[key] -= c;
  drop_zeros();
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.require_same_context(b);
  Series out(a.ctx_);
  SeriesContext::Key key = 0;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (!a.ctx_->add_keys(ka, kb, key)) continue;
      auto& slot = out.terms_[key];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  out.drop_zeros();
  return out;
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series& Series::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second *= scalar;
  return *this;
}

Series Series::operator-() const {
  Series out(*this);
  for (auto& entry : out.terms_) entry.second = -entry.second;
  return out;
}

Series Series::shifted(const Term& term) const {
  Series out(ctx_);
  if (term.coefficient == 0 || !ctx_->within_caps(term.monomial)) return out;
  auto shift = ctx_->pack(term.monomial);
  SeriesContext::Key key = 0;
  for (const auto& [k, c] : terms_) {
    if (ctx_->add_keys(k, shift, key)) out.terms_.emplace_hint(out.terms_.end(), key, c * term.coefficient);
  }
  return out;
}

Series Series::times_one_minus(const Term& term) const { return *this - shifted(term); }

Series Series::over_one_minus(const Term& term) const {
  if (term.monomial.is_constant()) {
    throw std::invalid_argument("1/(1 - c) with constant c has no truncated expansion");
  }
  Series out(*this);
  Series power = shifted(term);
  while (!power.is_zero()) {
    out += power;
    power = power.shifted(term);
  }
  return out;
}

Series Series::slice(std::size_t variable, int exponent) const {
  if (variable >= ctx_->arity()) throw std::invalid_argument("slice variable out of range");
  auto shift = static_cast<unsigned>(variable * lane_bits);
  Series out(ctx_);
  for (const auto& [key, c] : terms_) {
    if (static_cast<int>((key >> shift) & lane_mask) == exponent) {
      out.terms_.emplace(key & ~(lane_mask << shift), c);
    }
  }
  return out;
}

Series::Substitution Series::substitute_one(std::string_view variable) const {
  auto v = ctx_->index_of(variable);
  auto shift = static_cast<unsigned>(v * lane_bits);
  int cap = ctx_->cap(v);
  Substitution result{Series(ctx_), false};
  for (const auto& [key, c] : terms_) {
    if (static_cast<int>((key >> shift) & lane_mask) == cap) result.reached_cap = true;
    result.series.terms_[key & ~(lane_mask << shift)] += c;
  }
  result.series.drop_zeros();
  return result;
}

bool Series::operator==(const Series& other) const {
  require_same_context(other);
  return terms_ == other.terms_;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms()) {
    bool negative = c < 0;
    Integer magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    bool constant = mono.is_constant();
    if (constant || magnitude != 1) {
      out += magnitude.get_str();
      if (!constant) out += '*';
    }
    if (!constant) out += format_monomial(*ctx_, mono);
  }
  return out;
}

nlohmann::json Series::to_json() const {
  auto terms_json = nlohmann::json::array();
  for (const auto& [mono, c] : terms()) {
    terms_json.push_back({{"monomial", format_monomial(*ctx_, mono)},
                          {"exponents", mono.exponents()},
                          {"coefficient", c.get_str()}});
  }
  return {{"variables", ctx_->to_json()}, {"terms", std::move(terms_json)}};
}

Series geometric_inverse(const ContextPtr& ctx, const Term& term) {
  return Series::constant(ctx, 1).over_one_minus(term);
}

Series poch_finite(const ContextPtr& ctx, const Term& z, const Monomial& g, int n) {
  if (n < 0) throw std::invalid_argument("Pochhammer length must be nonnegative");
  Series out = Series::constant(ctx, 1);
  Term factor = z;
  for (int k = 0; k < n; ++k) {
    if (ctx->within_caps(factor.monomial)) {
      out = out.times_one_minus(factor);
    } else if (!g.is_constant()) {
      break;
    }
    factor.monomial = factor.monomial * g;
  }
  return out;
}

Series poch_infinite(const ContextPtr& ctx, const Term& z, const Monomial& g) {
  if (g.is_constant()) throw std::invalid_argument("infinite Pochhammer needs a non-constant base");
  Series out = Series::constant(ctx, 1);
  for (Term factor = z; ctx->within_caps(factor.monomial); factor.monomial = factor.monomial * g) {
    out = out.times_one_minus(factor);
  }
  return out;
}

Series poch_infinite_inverse(const ContextPtr& ctx, const Term& z, const Monomial& g) {
  if (g.is_constant()) throw std::invalid_argument("infinite Pochhammer needs a non-constant base");
  if (z.monomial.is_constant()) throw std::invalid_argument("1/(z; g)_inf needs a non-constant z");
  Series out = Series::constant(ctx, 1);
  for (Term factor = z; ctx->within_caps(factor.monomial); factor.monomial = factor.monomial * g) {
    out = out.over_one_minus(factor);
  }
  return out;
}

std::vector<Integer> gaussian_binomial_coefficients(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q-binomial needs 0 <= k <= n");
  // row[j] holds [r choose j] for the current r.
  std::vector<std::vector<Integer>> row{{Integer(1)}};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::vector<Integer>> next(static_cast<std::size_t>(r + 1));
    next[0] = {Integer(1)};
    next[static_cast<std::size_t>(r)] = {Integer(1)};
    for (int j = 1; j < r; ++j) {
      const auto& left = row[static_cast<std::size_t>(j - 1)];
      const auto& right = row[static_cast<std::size_t>(j)];
      auto& poly = next[static_cast<std::size_t>(j)];
      poly.assign(static_cast<std::size_t>(j * (r - j) + 1), Integer(0));
      for (std::size_t d = 0; d < left.size(); ++d) poly[d] += left[d];
      for (std::size_t d = 0; d < right.size(); ++d) poly[d + static_cast<std::size_t>(j)] += right[d];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Series q_binomial(const ContextPtr& ctx, int n, int k) {
  auto coeffs = gaussian_binomial_coefficients(n, k);
  auto q = ctx->index_of("q");
  Series out(ctx);
  std::vector<int> exps(ctx->arity(), 0);
  for (std::size_t d = 0; d < coeffs.size() && static_cast<int>(d) <= ctx->cap(q); ++d) {
    exps[q] = static_cast<int>(d);
    out += Series::from_term(ctx, {coeffs[d], Monomial(exps)});
  }
  return out;
}

Series q_multinomial(const ContextPtr& ctx, int n, const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("q-multinomial parts must be nonnegative");
    total += p;
  }
  if (total != n) throw std::invalid_argument("q-multinomial parts must sum to n");
  Series out = Series::constant(ctx, 1);
  int remaining = n;
  for (int p : parts) {
    if (p != 0 && p != remaining) out *= q_binomial(ctx, remaining, p);
    remaining -= p;
  }
  return out;
}

}  // namespace schmidt
