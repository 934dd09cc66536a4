#pragma once

#include "nambu/monomial_order.hpp"
#include "nambu/polynomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace nambu {

inline constexpr std::uint64_t kDefaultStepBudget = 100'000;

/// Counts reduction steps across one or more Groebner computations and throws
/// BudgetExhausted once the limit is passed.
class StepBudget {
public:
  explicit StepBudget(std::uint64_t limit = kDefaultStepBudget) : limit_(limit) {}

  void charge(std::uint64_t steps = 1);
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t remaining() const noexcept { return used_ >= limit_ ? 0 : limit_ - used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Leading monomial / coefficient of a nonzero polynomial under `order`.
const Polynomial::Term& leading_term(const Polynomial& p, const MonomialOrder& order);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i d_i + r with no monomial of r divisible
/// by any leading monomial of the divisors. Divisors are tried in list order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order = MonomialOrder::grevlex());

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order = MonomialOrder::grevlex());

/// A Groebner basis: monic generators sorted by descending leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, bool reduced);

  std::span<const Polynomial> generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  const ContextPtr& context() const noexcept { return generators_.front().context(); }

private:
  std::vector<Polynomial> generators_;
  MonomialOrder order_;
  bool reduced_;
};

/// Reduced Groebner basis of the ideal generated by `gens` (Buchberger with
/// Gebauer-Moeller pair elimination; reductions run on primitive integer
/// polynomials). Throws BudgetExhausted when `budget` runs out and DomainError
/// if every generator is zero.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         StepBudget& budget);
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const MonomialOrder& order = MonomialOrder::grevlex(),
                         std::uint64_t budget = kDefaultStepBudget);

/// True iff the ideal is the whole ring.
bool contains_one(const GroebnerBasis& gb);

/// Unique representative of f modulo the ideal of a reduced basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, StepBudget* budget = nullptr);

/// Every S-polynomial of the generators reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

} // namespace nambu
