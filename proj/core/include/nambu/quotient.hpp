#pragma once

#include "nambu/bracket.hpp"
#include "nambu/groebner.hpp"

#include <vector>

namespace nambu {

/// The quotient algebra P/(C - lambda) for a bracket with central C.
/// Representatives are grevlex normal forms modulo the principal ideal.
class QuotientContext {
public:
  QuotientContext(Bracket bracket, Polynomial casimir, Rational lambda);

  const Bracket& bracket() const noexcept { return bracket_; }
  const Polynomial& casimir() const noexcept { return casimir_; }
  const Rational& lambda() const noexcept { return lambda_; }
  const GroebnerBasis& modulus_basis() const noexcept { return modulus_; }
  const ContextPtr& context() const noexcept { return casimir_.context(); }
  /// deg C, the period of the Z_m grading.
  unsigned m() const noexcept { return m_; }

private:
  Bracket bracket_;
  Polynomial casimir_;
  Rational lambda_;
  GroebnerBasis modulus_;
  unsigned m_;
};

/// A polynomial all of whose monomial degrees are congruent to `residue` mod m.
struct GradedClass {
  unsigned residue = 0;
  Polynomial representative;
};

Polynomial q_reduce(const QuotientContext& q, const Polynomial& f);
/// Ambient bracket of the given representatives, reduced.
Polynomial q_bracket(const QuotientContext& q, std::span<const Polynomial> fs);
/// Nonzero residue classes of f, in increasing residue order.
std::vector<GradedClass> grade_decompose(const QuotientContext& q, const Polynomial& f);
std::vector<GradedClass> grade_decompose(const Polynomial& f, unsigned m);
/// Residue of the bracket of inputs with the given residues:
/// (r_1 - 1) + ... + (r_n - 1) + (m - 1) mod m.
unsigned bracket_grade_check(const QuotientContext& q, std::span<const unsigned> residues);
unsigned bracket_grade(unsigned m, std::span<const unsigned> residues);
/// Homogeneous f' with the same degree and quotient class as an m-homogeneous
/// f, built as f_top + sum_j f_j (C / lambda)^{(top - j) / m}.
Polynomial m_homogeneous_lift(const QuotientContext& q, const Polynomial& f);

} // namespace nambu
