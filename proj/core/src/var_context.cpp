#include "nambu/var_context.hpp"

#include "nambu/error.hpp"

#include <set>

namespace nambu {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

ContextPtr indexed_context(std::string_view stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(stem) + std::to_string(i));
  return make_context(std::move(names));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("polynomials belong to different variable contexts");
}

} // namespace nambu
