#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nambu {

/// Upper bound on the number of ambient variables of any context.
inline constexpr std::size_t kMaxVars = 16;

/// Ordered list of distinct variable names. The position of a name is its
/// variable index and also its rank in the monomial order (first = largest).
class VarContext {
public:
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarContext& other) const noexcept { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

/// Validates and wraps a list of names.
ContextPtr make_context(std::vector<std::string> names);

/// x1, ..., xN.
ContextPtr indexed_context(std::string_view stem, std::size_t count);

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

/// Throws ContextMismatch unless the two contexts agree.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace nambu
