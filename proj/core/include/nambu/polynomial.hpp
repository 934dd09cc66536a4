#pragma once

#include "nambu/monomial.hpp"
#include "nambu/rational.hpp"
#include "nambu/var_context.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace nambu {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in canonical form: sorted by descending grevlex order over
/// the context's variable order, no zero coefficients, no repeated monomials.
/// Two polynomials in the same context are equal iff their term lists are.
class Polynomial {
public:
  struct Term {
    Monomial monomial;
    Rational coeff;

    bool operator==(const Term&) const = default;
  };

  /// The zero polynomial of `ctx`.
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Rational& c);
  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t num_vars() const noexcept { return ctx_->size(); }

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  /// Grevlex-leading term; requires a nonzero polynomial.
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this * c * m; keeps the term order without re-sorting.
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;

  /// Composes with `images`, one polynomial per variable of this context; all
  /// images share one (possibly different) target context.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Degree -> homogeneous component. Empty for the zero polynomial.
  std::map<unsigned, Polynomial> homogeneous_components() const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Deterministic text in canonical term order, e.g. "2*e*f + 1/2*h^2".
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

private:
  Polynomial(ContextPtr ctx, std::vector<Term> canonical_terms);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

std::string to_string(const Monomial& m, const VarContext& ctx);

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);
std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& p);

/// Substitution by variable name; every variable of `p` must be assigned.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);

/// sum_i x_i dC/dx_i - m C for homogeneous C of degree m >= 1. Zero by Euler's
/// formula; throws DomainError if C is not homogeneous or is constant.
Polynomial euler_defect(const Polynomial& c);

} // namespace nambu
