#pragma once

#include "nambu/var_context.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace nambu {

/// Exponent vector of a monomial. Storage is fixed at kMaxVars slots; slots
/// beyond the ambient context's size are always zero.
class Monomial {
public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;

  bool operator==(const Monomial& other) const noexcept = default;

  std::size_t hash() const noexcept;

private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison (x0 > x1 > ...). Negative when
/// a < b, zero when equal, positive when a > b.
inline int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

} // namespace nambu
