#include "nambu/monomial_order.hpp"

#include "nambu/error.hpp"

#include <algorithm>

namespace nambu {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DomainError("monomial order priority must be a permutation");
  }
  if (priority_.size() > kMaxVars) throw DomainError("monomial order has too many variables");
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  throw DomainError("unknown monomial order '" + std::string(name) + "' (expected grevlex or lex)");
}

std::string MonomialOrder::name() const {
  return kind_ == OrderKind::Lex ? "lex" : "grevlex";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = priority_.empty() ? kMaxVars : priority_.size();
  if (kind_ == OrderKind::Lex) {
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = var(r);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t r = n; r-- > 0;) {
    const auto v = var(r);
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

} // namespace nambu
