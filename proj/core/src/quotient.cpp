#include "nambu/quotient.hpp"

#include "nambu/error.hpp"

#include <map>

namespace nambu {

namespace {

GroebnerBasis principal_basis(const Polynomial& casimir, const Rational& lambda) {
  if (lambda == 0) throw DomainError("quotient requires lambda != 0");
  if (casimir.is_constant()) throw DomainError("quotient requires a non-constant C");
  const Polynomial gen = casimir - Polynomial::constant(casimir.context(), lambda);
  return buchberger(std::span<const Polynomial>(&gen, 1));
}

} // namespace

QuotientContext::QuotientContext(Bracket bracket, Polynomial casimir, Rational lambda)
    : bracket_(std::move(bracket)),
      casimir_(std::move(casimir)),
      lambda_(std::move(lambda)),
      modulus_(principal_basis(casimir_, lambda_)),
      m_(static_cast<unsigned>(casimir_.degree())) {
  require_same_context(bracket_.context(), casimir_.context());
}

Polynomial q_reduce(const QuotientContext& q, const Polynomial& f) {
  require_same_context(q.context(), f.context());
  return normal_form(f, q.modulus_basis());
}

Polynomial q_bracket(const QuotientContext& q, std::span<const Polynomial> fs) {
  return q_reduce(q, q.bracket()(fs));
}

std::vector<GradedClass> grade_decompose(const Polynomial& f, unsigned m) {
  if (m == 0) throw DomainError("grading period must be positive");
  std::map<unsigned, std::vector<Polynomial::Term>> parts;
  for (const auto& t : f.terms()) parts[t.monomial.degree() % m].push_back(t);
  std::vector<GradedClass> out;
  for (auto& [r, terms] : parts) {
    out.push_back(GradedClass{r, Polynomial::from_terms(f.context(), std::move(terms))});
  }
  return out;
}

std::vector<GradedClass> grade_decompose(const QuotientContext& q, const Polynomial& f) {
  return grade_decompose(f, q.m());
}

unsigned bracket_grade(unsigned m, std::span<const unsigned> residues) {
  if (m == 0) throw DomainError("grading period must be positive");
  // Each (r_i - 1) is taken as r_i + m - 1 to stay non-negative.
  unsigned long total = m - 1;
  for (auto r : residues) total += (r % m) + m - 1;
  return static_cast<unsigned>(total % m);
}

unsigned bracket_grade_check(const QuotientContext& q, std::span<const unsigned> residues) {
  if (residues.size() != q.bracket().arity()) {
    throw ArityMismatch("bracket of arity " + std::to_string(q.bracket().arity()) + " given " +
                        std::to_string(residues.size()) + " residues");
  }
  return bracket_grade(q.m(), residues);
}

Polynomial m_homogeneous_lift(const QuotientContext& q, const Polynomial& f) {
  require_same_context(q.context(), f.context());
  if (!q.casimir().is_homogeneous()) throw DomainError("lift requires a homogeneous C");
  const unsigned m = q.m();
  if (grade_decompose(f, m).size() != 1) throw DomainError("lift input is not m-homogeneous");
  if (q_reduce(q, f).is_zero()) throw DomainError("lift input is zero in the quotient");

  const auto parts = f.homogeneous_components();
  const unsigned top = parts.rbegin()->first;
  const Polynomial unit = q.casimir() * (Rational(1) / q.lambda());
  Polynomial out(f.context());
  for (const auto& [d, part] : parts) out += part * unit.pow((top - d) / m);
  return out;
}

} // namespace nambu
