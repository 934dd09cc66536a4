#include "nambu/analysis.hpp"

#include "nambu/error.hpp"

namespace nambu {

namespace {

// Terms of p with x_j-exponent exactly e, with that power removed.
Polynomial coefficient_in(const Polynomial& p, std::size_t j, unsigned e) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : p.terms()) {
    if (t.monomial[j] != e) continue;
    Monomial m = t.monomial;
    m.set(j, 0);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(p.context(), std::move(out));
}

// Root candidate when x_j^D has nonzero coefficient a in C.
std::optional<Polynomial> root_along(const Polynomial& c, std::size_t j, unsigned k) {
  const auto& ctx = c.context();
  const unsigned big_d = static_cast<unsigned>(c.degree());
  const unsigned m = big_d / k;
  const Rational a = c.coefficient(Monomial::variable(j, big_d));
  const Polynomial target = c * (Rational(1) / a);

  Polynomial root = Polynomial::term(ctx, Monomial::variable(j, m), 1);
  for (unsigned r = m; r-- > 0;) {
    const Polynomial diff = target - root.pow(k);
    const Polynomial b = coefficient_in(diff, j, m * (k - 1) + r) * Rational(1, k);
    root += b.times_term(Monomial::variable(j, r), 1);
  }
  if (root.pow(k) * a != c) return std::nullopt;
  return root;
}

std::vector<Polynomial> shear_images(const ContextPtr& ctx, std::size_t j, const Rational& t) {
  std::vector<Polynomial> images;
  const Polynomial xj = Polynomial::variable(ctx, j);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    Polynomial xi = Polynomial::variable(ctx, i);
    if (i != j) xi += xj * t;
    images.push_back(std::move(xi));
  }
  return images;
}

RootResult normalized(unsigned k, const Polynomial& c, const Polynomial& root) {
  RootResult out;
  out.k = k;
  out.root = root.monic();
  out.alpha = c.leading_term().coeff;
  return out;
}

} // namespace

RootResult kth_root(const Polynomial& c, unsigned k) {
  if (k < 2) throw DomainError("kth_root requires k >= 2");
  if (c.is_constant() || !c.is_homogeneous()) {
    throw DomainError("kth_root requires a homogeneous non-constant polynomial");
  }
  const auto& ctx = c.context();
  const unsigned big_d = static_cast<unsigned>(c.degree());
  RootResult none;
  none.k = k;
  if (big_d % k != 0) return none;

  for (std::size_t j = 0; j < ctx->size(); ++j) {
    if (c.coefficient(Monomial::variable(j, big_d)) == 0) continue;
    // The candidate is unique, so one leading variable settles the question.
    if (auto root = root_along(c, j, k)) return normalized(k, c, *root);
    return none;
  }
  for (std::size_t j = 0; j < ctx->size(); ++j) {
    for (int t = 1; t <= 3; ++t) {
      const Polynomial sheared = c.substitute(shear_images(ctx, j, t));
      if (sheared.coefficient(Monomial::variable(j, big_d)) == 0) continue;
      auto root = root_along(sheared, j, k);
      if (!root) return none;
      const Polynomial back = root->substitute(shear_images(ctx, j, -t));
      return normalized(k, c, back);
    }
  }
  throw DomainError("kth_root: no leading variable found after shearing");
}

ClosedResult is_closed_homogeneous(const Polynomial& c) {
  if (c.is_constant() || !c.is_homogeneous()) {
    throw DomainError("closedness is defined here for homogeneous non-constant polynomials");
  }
  const unsigned big_d = static_cast<unsigned>(c.degree());
  ClosedResult out;
  for (unsigned k = big_d; k >= 2; --k) {
    if (big_d % k != 0) continue;
    auto r = kth_root(c, k);
    if (r.root) {
      out.closed = false;
      out.witness = std::move(r);
      return out;
    }
  }
  return out;
}

Polynomial minimal_root_homogeneous(const Polynomial& c) {
  auto res = is_closed_homogeneous(c);
  return res.closed ? c.monic() : *res.witness->root;
}

} // namespace nambu
