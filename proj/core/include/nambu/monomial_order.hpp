#pragma once

#include "nambu/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nambu {

enum class OrderKind { GradedReverseLex, Lex };

/// A monomial order over a variable priority list. The priority list names
/// variable indices from most to least significant; empty means the context
/// order.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {});

  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GradedReverseLex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  /// "grevlex" or "lex".
  static MonomialOrder parse(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  std::string name() const;

  /// Sign of a - b under this order.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

private:
  std::size_t var(std::size_t rank) const noexcept {
    return priority_.empty() ? rank : priority_[rank];
  }

  OrderKind kind_ = OrderKind::GradedReverseLex;
  std::vector<std::size_t> priority_;
};

} // namespace nambu
