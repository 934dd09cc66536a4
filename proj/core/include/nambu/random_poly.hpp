#pragma once

#include "nambu/polynomial.hpp"

#include <cstdint>
#include <random>

namespace nambu {

/// Seeded source of random polynomials for identity trials. Draws are
/// reduced modulo the range so sequences are identical across standard
/// libraries for a given seed.
class PolyRng {
public:
  explicit PolyRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Nonzero integer in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound);

  /// Up to `max_terms` terms of degree <= max_degree, coefficients in
  /// [-coeff_bound, coeff_bound]; never the zero polynomial.
  Polynomial poly(const ContextPtr& ctx, unsigned max_degree, std::int64_t coeff_bound = 9,
                  std::size_t max_terms = 4);
  /// Nonzero homogeneous polynomial of exactly `degree`.
  Polynomial homogeneous(const ContextPtr& ctx, unsigned degree, std::int64_t coeff_bound = 9,
                         std::size_t max_terms = 4);
  /// Nonzero polynomial whose monomial degrees are all congruent to
  /// `residue` modulo m, with degree at most max_degree.
  Polynomial m_homogeneous(const ContextPtr& ctx, unsigned m, unsigned residue,
                           unsigned max_degree, std::int64_t coeff_bound = 9,
                           std::size_t max_terms = 4);

  Monomial monomial(std::size_t nvars, unsigned degree);

private:
  std::mt19937_64 engine_;
};

} // namespace nambu
