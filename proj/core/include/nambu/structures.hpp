#pragma once

#include "nambu/bracket.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nambu {

/// A concrete algebra: its bracket, the Casimir element it ships with, and the
/// parameter values it was built from.
struct AlgebraSpec {
  std::string name;
  Bracket bracket;
  /// The same bracket written as J(., ..., ., C), when one exists.
  std::optional<JacobianBracket> jacobian_form;
  std::optional<Polynomial> casimir;
  std::map<std::string, Rational> parameters;
  /// Non-degeneracy flag of the defining quadratic form (n-Lie tables only).
  std::optional<bool> simple;
};

/// sl2 over (e, f, h): {h,e} = 2e, {h,f} = -2f, {e,f} = h; C = 1/2 h^2 + 2ef.
AlgebraSpec make_sl2();

/// The n-Lie algebra of a quadratic form f in n+1 variables:
/// [e_1..^e_i..e_{n+1}] = (-1)^{n-i+1} df/dx_i (e).
AlgebraSpec make_nlie(const Polynomial& quadratic_form);
/// make_nlie for f = 1/2 sum_i (-1)^{n-i+1} alpha_i x_i^2, so that
/// [e_1..^e_i..e_{n+1}] = alpha_i e_i.
AlgebraSpec make_nlie_diagonal(std::span<const Rational> alphas);

/// P_C for C = x1^2 + ... + x_{n+1}^2 at the given arity.
AlgebraSpec make_quadric(std::size_t arity);

/// Elliptic Poisson algebra: C = 1/3 (x^3 + y^3 + z^3) - alpha xyz.
AlgebraSpec make_elliptic(const Rational& alpha);

/// Canonical 7-dimensional Malcev table [e_i, e_{i+1}] = e_{i+3} (indices mod 7),
/// closed under cyclic permutation of each triple; C = e1^2 + ... + e7^2.
AlgebraSpec make_malcev_canonical();

/// M(alpha, beta, gamma) over f1..f7 by formal square-root scaling of the
/// canonical basis. Throws DomainError for a zero parameter.
AlgebraSpec make_malcev_abg(const Rational& alpha, const Rational& beta, const Rational& gamma);

/// Splittable basis (h, x, y, z, x', y', z'); C = -(xx' + yy' + zz' + 1/4 h^2).
AlgebraSpec make_malcev_splittable();

/// P_C for an arbitrary non-constant C in arity+1 variables.
AlgebraSpec make_jacobian_algebra(const Polynomial& casimir, std::size_t arity,
                                  std::string name = "custom");

/// Builds an algebra from a registry name such as "sl2", "elliptic(1)",
/// "quadric(3)", "nlie(1,1,1,1)", "malcev-abg(1,2,3)", "malcev-splittable".
AlgebraSpec make_algebra(std::string_view spec);

/// Registry names with their parameter syntax.
std::vector<std::string> builtin_algebra_names();

/// Symmetric Gram matrix (Hessian) of a quadratic form.
std::vector<std::vector<Rational>> gram_matrix(const Polynomial& quadratic_form);

/// Exact determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Human-readable multiplication table, one line per nonzero entry.
std::string describe(const AlgebraSpec& spec);

} // namespace nambu
