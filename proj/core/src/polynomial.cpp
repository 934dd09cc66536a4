#include "nambu/polynomial.hpp"

#include "nambu/error.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace nambu {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw DomainError("variable index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > std::numeric_limits<Exponent>::max()) {
    throw DomainError("monomial degree overflow");
  }
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] + other.exp_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - other.exp_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent words.
  std::uint64_t words[kMaxVars * sizeof(Exponent) / sizeof(std::uint64_t)];
  std::memcpy(words, exp_.data(), sizeof(words));
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Monomial& m, const VarContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return grevlex_compare(a.monomial, b.monomial) > 0;
}

// Merge of two canonical term lists: a + sign * b.
std::vector<Polynomial::Term> merge_add(std::span<const Polynomial::Term> a,
                                        std::span<const Polynomial::Term> b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Polynomial::Term{b[j].monomial, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Polynomial::Term{b[j].monomial, -b[j].coeff} : b[j]);
  return out;
}

void check_monomial_fits(const Monomial& m, const VarContext& ctx) {
  for (std::size_t i = ctx.size(); i < kMaxVars; ++i) {
    if (m[i] != 0) throw DomainError("monomial uses a variable outside the context");
  }
}

} // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw DomainError("polynomial requires a variable context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> canonical_terms)
    : ctx_(std::move(ctx)), terms_(std::move(canonical_terms)) {}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  return term(std::move(ctx), Monomial{}, c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  if (!ctx || index >= ctx->size()) throw DomainError("variable index out of range");
  return term(std::move(ctx), Monomial::variable(index), Rational(1));
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  const auto idx = ctx->index_of(name);
  if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ctx), *idx);
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ctx));
  check_monomial_fits(m, *p.ctx_);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  for (const auto& t : terms) check_monomial_fits(t.monomial, *p.ctx_);
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  p.terms_ = std::move(out);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational(0)}, term_greater);
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  if (other.terms_.empty()) return *this;
  terms_ = merge_add(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  if (other.terms_.empty()) return *this;
  terms_ = merge_add(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
  if (a.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod = s.coeff * t.coeff;
      auto [it, fresh] = acc.try_emplace(s.monomial * t.monomial, prod);
      if (!fresh) it->second += prod;
    }
  }
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return Polynomial(a.ctx_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  check_monomial_fits(m, *ctx_);
  if (c == 0) return Polynomial(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coeff * c});
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ctx_->size()) throw DomainError("derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Dividing every surviving monomial by the same variable preserves the order.
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ctx_->size()) {
    throw DomainError("substitute: expected " + std::to_string(ctx_->size()) + " images, got " +
                      std::to_string(images.size()));
  }
  if (images.empty()) return *this;
  const ContextPtr& target = images.front().context();
  for (const auto& img : images) require_same_context(target, img.context());

  // Cache powers of each image so repeated exponents are computed once.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial acc = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (t.monomial[v] != 0) acc = acc * power_of(v, t.monomial[v]);
    }
    result += acc;
  }
  return result;
}

std::map<unsigned, Polynomial> Polynomial::homogeneous_components() const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.monomial.degree()].push_back(t);
  std::map<unsigned, Polynomial> out;
  for (auto& [d, ts] : buckets) out.emplace(d, Polynomial(ctx_, std::move(ts)));
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  const Rational inv = 1 / terms_.front().coeff;
  r *= inv;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += nambu::to_string(mag);
    } else {
      if (mag != 1) out += nambu::to_string(mag) + "*";
      out += nambu::to_string(t.monomial, *ctx_);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

// ---------------------------------------------------------- free functions

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  return p.derivative(var_index);
}

std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& p) {
  return p.homogeneous_components();
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  if (assignment.empty()) {
    if (p.is_constant()) return p;
    throw DomainError("substitute: empty assignment");
  }
  const ContextPtr& target = assignment.begin()->second.context();
  std::vector<Polynomial> images;
  images.reserve(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    const auto& name = p.context()->name(i);
    auto it = assignment.find(name);
    if (it != assignment.end()) {
      images.push_back(it->second);
      continue;
    }
    bool used = false;
    for (const auto& t : p.terms()) used = used || t.monomial[i] != 0;
    if (used) throw DomainError("substitute: no assignment for variable '" + name + "'");
    images.push_back(Polynomial(target));
  }
  return p.substitute(images);
}

Polynomial euler_defect(const Polynomial& c) {
  if (c.is_constant()) throw DomainError("euler_defect: polynomial must be non-constant");
  if (!c.is_homogeneous()) throw DomainError("euler_defect: polynomial must be homogeneous");
  const auto& ctx = c.context();
  Polynomial sum(ctx);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    sum += Polynomial::variable(ctx, i) * c.derivative(i);
  }
  return sum - c * Rational(c.degree());
}

} // namespace nambu
