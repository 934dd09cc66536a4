#pragma once

// Reference computations that share no code with the library beyond the
// Polynomial term list: direct evaluation, Leibniz-formula determinants and
// term-wise partial derivatives at a point.

#include "nambu/polynomial.hpp"
#include "nambu/random_poly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace nambu::test {

inline Rational power(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

inline Rational eval(const Polynomial& p, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) v *= power(point[i], t.monomial[i]);
    sum += v;
  }
  return sum;
}

inline Rational eval_partial(const Polynomial& p, std::size_t var, const std::vector<Rational>& point) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Rational v = t.coeff * e;
    for (std::size_t i = 0; i < point.size(); ++i) v *= power(point[i], t.monomial[i] - (i == var ? 1 : 0));
    sum += v;
  }
  return sum;
}

// Leibniz expansion over all permutations.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Rational prod = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det[d f_i / d x_{cols_j}] at a point.
inline Rational jacobian_minor_at(const std::vector<Polynomial>& fs, const std::vector<std::size_t>& cols,
                                  const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> m;
  for (const auto& f : fs) {
    std::vector<Rational> row;
    for (auto c : cols) row.push_back(eval_partial(f, c, point));
    m.push_back(std::move(row));
  }
  return leibniz_det(m);
}

// Reduced p/q with p a nonzero integer in [-bound, bound] and 1 <= q <= max_den.
inline Rational random_fraction(PolyRng& rng, std::int64_t bound, std::int64_t max_den) {
  Rational r(static_cast<long>(rng.nonzero(bound)), static_cast<unsigned long>(rng.uniform(1, max_den)));
  r.canonicalize();
  return r;
}

inline std::vector<Rational> random_point(PolyRng& rng, std::size_t n, std::int64_t bound = 7) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(static_cast<long>(rng.uniform(-bound, bound)), static_cast<unsigned long>(rng.uniform(1, 3)));
    r.canonicalize();
    p.push_back(r);
  }
  return p;
}

} // namespace nambu::test
