#include "nambu/random_poly.hpp"

#include "nambu/error.hpp"

namespace nambu {

std::int64_t PolyRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

std::int64_t PolyRng::nonzero(std::int64_t bound) {
  const auto v = uniform(1, bound);
  return uniform(0, 1) ? v : -v;
}

Monomial PolyRng::monomial(std::size_t nvars, unsigned degree) {
  Monomial m;
  for (unsigned d = 0; d < degree; ++d) {
    const auto v = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(nvars) - 1));
    m.set(v, m[v] + 1u);
  }
  return m;
}

Polynomial PolyRng::poly(const ContextPtr& ctx, unsigned max_degree, std::int64_t coeff_bound,
                         std::size_t max_terms) {
  while (true) {
    const auto nterms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < nterms; ++i) {
      const auto deg = static_cast<unsigned>(uniform(0, max_degree));
      terms.push_back({monomial(ctx->size(), deg), Rational(nonzero(coeff_bound))});
    }
    auto p = Polynomial::from_terms(ctx, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Polynomial PolyRng::homogeneous(const ContextPtr& ctx, unsigned degree, std::int64_t coeff_bound,
                                std::size_t max_terms) {
  while (true) {
    const auto nterms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < nterms; ++i) {
      terms.push_back({monomial(ctx->size(), degree), Rational(nonzero(coeff_bound))});
    }
    auto p = Polynomial::from_terms(ctx, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

Polynomial PolyRng::m_homogeneous(const ContextPtr& ctx, unsigned m, unsigned residue,
                                  unsigned max_degree, std::int64_t coeff_bound,
                                  std::size_t max_terms) {
  if (m == 0 || residue >= m) throw DomainError("m_homogeneous: residue out of range");
  if (residue > max_degree) throw DomainError("m_homogeneous: no degree fits the residue");
  const unsigned steps = (max_degree - residue) / m;
  while (true) {
    const auto nterms = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_terms)));
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < nterms; ++i) {
      const auto deg = residue + m * static_cast<unsigned>(uniform(0, steps));
      terms.push_back({monomial(ctx->size(), deg), Rational(nonzero(coeff_bound))});
    }
    auto p = Polynomial::from_terms(ctx, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

} // namespace nambu
