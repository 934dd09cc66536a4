#include "nambu/bracket.hpp"

#include "nambu/error.hpp"

#include <bit>
#include <unordered_map>

namespace nambu {

namespace {

// Minors of the matrix [d rows_a / d x_j] with rows taken in order 0..k-1 and
// columns from a bitmask, expanded along the last row and memoised by mask.
class MinorExpander {
public:
  MinorExpander(std::span<const Polynomial> rows, const ContextPtr& ctx) : ctx_(ctx) {
    const std::size_t n = ctx->size();
    partials_.reserve(rows.size());
    for (const auto& r : rows) {
      require_same_context(ctx, r.context());
      std::vector<Polynomial> row;
      row.reserve(n);
      for (std::size_t j = 0; j < n; ++j) row.push_back(r.derivative(j));
      partials_.push_back(std::move(row));
    }
  }

  const Polynomial& minor(std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const int k = std::popcount(mask);
    Polynomial det(ctx_);
    if (k == 0) {
      det = Polynomial::constant(ctx_, 1);
    } else {
      const auto& row = partials_[static_cast<std::size_t>(k - 1)];
      int pos = 0;
      for (std::size_t c = 0; c < ctx_->size(); ++c) {
        if (!(mask & (1u << c))) continue;
        const Polynomial& entry = row[c];
        if (!entry.is_zero()) {
          const Polynomial& sub = minor(mask & ~(1u << c));
          if (!sub.is_zero()) {
            // Sign of entry (k-1, pos) in a k x k determinant.
            if (((k - 1) + pos) % 2 == 0) {
              det += entry * sub;
            } else {
              det -= entry * sub;
            }
          }
        }
        ++pos;
      }
    }
    return memo_.emplace(mask, std::move(det)).first->second;
  }

private:
  ContextPtr ctx_;
  std::vector<std::vector<Polynomial>> partials_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

std::uint32_t mask_of(std::span<const std::size_t> tuple) {
  std::uint32_t m = 0;
  for (auto i : tuple) m |= 1u << i;
  return m;
}

void require_arity(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw ArityMismatch("bracket of arity " + std::to_string(expected) + " applied to " +
                        std::to_string(got) + " arguments");
  }
}

} // namespace

int sort_sign(IndexTuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] == t[i]) return 0;
  }
  return sign;
}

std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------------ StructureTable

StructureTable::StructureTable(ContextPtr generators, std::size_t arity)
    : ctx_(std::move(generators)), arity_(arity) {
  if (!ctx_) throw DomainError("structure table requires a context");
  if (arity_ < 2) throw DomainError("bracket arity must be at least 2");
  if (arity_ > ctx_->size()) throw DomainError("bracket arity exceeds the number of generators");
}

void StructureTable::set(IndexTuple tuple, const Polynomial& value) {
  require_arity(arity_, tuple.size());
  require_same_context(ctx_, value.context());
  for (auto i : tuple) {
    if (i >= ctx_->size()) throw DomainError("structure table index out of range");
  }
  const int sign = sort_sign(tuple);
  if (sign == 0) throw DomainError("structure table tuple repeats a generator");
  if (value.is_zero()) {
    entries_.erase(tuple);
    return;
  }
  entries_.insert_or_assign(std::move(tuple), sign > 0 ? value : -value);
}

Polynomial StructureTable::get(std::span<const std::size_t> tuple) const {
  require_arity(arity_, tuple.size());
  IndexTuple t(tuple.begin(), tuple.end());
  for (auto i : t) {
    if (i >= ctx_->size()) throw DomainError("structure table index out of range");
  }
  const int sign = sort_sign(t);
  if (sign == 0) return Polynomial(ctx_);
  auto it = entries_.find(t);
  if (it == entries_.end()) return Polynomial(ctx_);
  return sign > 0 ? it->second : -it->second;
}

bool StructureTable::operator==(const StructureTable& other) const {
  if (arity_ != other.arity_ || !same_context(ctx_, other.ctx_)) return false;
  return entries_ == other.entries_;
}

// ------------------------------------------------------------------ Jacobian

Polynomial jacobian(std::span<const Polynomial> fs) {
  if (fs.empty()) throw ArityMismatch("jacobian of an empty list");
  const auto& ctx = fs.front().context();
  if (fs.size() != ctx->size()) {
    throw ArityMismatch("jacobian needs as many polynomials (" + std::to_string(fs.size()) +
                        ") as variables (" + std::to_string(ctx->size()) + ")");
  }
  MinorExpander ex(fs, ctx);
  const std::uint32_t full = ctx->size() == 32 ? ~0u : (1u << ctx->size()) - 1;
  return ex.minor(full);
}

JacobianBracket::JacobianBracket(Polynomial casimir, std::size_t arity)
    : casimir_(std::move(casimir)), arity_(arity) {
  if (arity_ < 2) throw DomainError("bracket arity must be at least 2");
  if (casimir_.num_vars() != arity_ + 1) {
    throw DomainError("a Jacobian bracket of arity " + std::to_string(arity_) + " needs " +
                      std::to_string(arity_ + 1) + " variables");
  }
  if (casimir_.is_constant()) throw DomainError("Jacobian bracket requires a non-constant C");
}

Polynomial JacobianBracket::operator()(std::span<const Polynomial> fs) const {
  require_arity(arity_, fs.size());
  std::vector<Polynomial> rows(fs.begin(), fs.end());
  rows.push_back(casimir_);
  return jacobian(rows);
}

Polynomial JacobianBracket::on_generators(std::span<const std::size_t> tuple) const {
  require_arity(arity_, tuple.size());
  IndexTuple t(tuple.begin(), tuple.end());
  for (auto i : t) {
    if (i > arity_) throw DomainError("generator index out of range");
  }
  const int sign = sort_sign(t);
  if (sign == 0) return Polynomial(context());
  // The sorted tuple omits exactly one variable.
  std::size_t missing = arity_;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != i) {
      missing = i;
      break;
    }
  }
  // 1-based i = missing + 1: sign (-1)^{n - i + 1} = (-1)^{n - missing}.
  Polynomial d = casimir_.derivative(missing);
  const bool negate = ((arity_ - missing) % 2 == 1) != (sign < 0);
  return negate ? -d : d;
}

StructureTable JacobianBracket::generator_table() const {
  StructureTable table(context(), arity_);
  for (const auto& t : increasing_tuples(arity_ + 1, arity_)) table.set(t, on_generators(t));
  return table;
}

// --------------------------------------------------------------------- Table

TableBracket::TableBracket(StructureTable table) : table_(std::move(table)) {}

Polynomial TableBracket::operator()(std::span<const Polynomial> fs) const {
  require_arity(arity(), fs.size());
  const auto& ctx = context();
  Polynomial out(ctx);
  MinorExpander ex(fs, ctx);
  for (const auto& [tuple, value] : table_.entries()) {
    const Polynomial& m = ex.minor(mask_of(tuple));
    if (!m.is_zero()) out += m * value;
  }
  return out;
}

// ------------------------------------------------------------------- Bracket

std::size_t Bracket::arity() const noexcept {
  return std::visit([](const auto& b) { return b.arity(); }, impl_);
}

const ContextPtr& Bracket::context() const noexcept {
  return std::visit([](const auto& b) -> const ContextPtr& { return b.context(); }, impl_);
}

Polynomial Bracket::operator()(std::span<const Polynomial> fs) const {
  return std::visit([&](const auto& b) { return b(fs); }, impl_);
}

Polynomial Bracket::on_generators(std::span<const std::size_t> tuple) const {
  return std::visit([&](const auto& b) { return b.on_generators(tuple); }, impl_);
}

Polynomial jb_eval(const JacobianBracket& b, std::span<const Polynomial> fs) { return b(fs); }
Polynomial tb_eval(const TableBracket& b, std::span<const Polynomial> fs) { return b(fs); }

Polynomial ternary_jacobian(const Bracket& b, const Polynomial& x, const Polynomial& y,
                            const Polynomial& z) {
  require_arity(2, b.arity());
  return b({b({x, y}), z}) - b({b({x, z}), y}) - b({x, b({y, z})});
}

} // namespace nambu
