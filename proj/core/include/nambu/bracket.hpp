#pragma once

#include "nambu/polynomial.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

namespace nambu {

using IndexTuple = std::vector<std::size_t>;

/// Skew-symmetric n-ary structure constants on the generators of a context.
/// Only strictly increasing index tuples are stored; any other tuple is read
/// through the sign of its sorting permutation, and repeated indices give 0.
class StructureTable {
public:
  StructureTable(ContextPtr generators, std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t num_generators() const noexcept { return ctx_->size(); }

  /// Stores [e_t1, ..., e_tn] = value. The tuple may be in any order of
  /// distinct indices; the value is re-signed onto the increasing tuple.
  void set(IndexTuple tuple, const Polynomial& value);
  Polynomial get(std::span<const std::size_t> tuple) const;

  const std::map<IndexTuple, Polynomial>& entries() const noexcept { return entries_; }

  bool operator==(const StructureTable& other) const;

private:
  ContextPtr ctx_;
  std::size_t arity_;
  std::map<IndexTuple, Polynomial> entries_;
};

/// Sign (+1/-1) of the permutation sorting `tuple`, or 0 when an index repeats.
int sort_sign(IndexTuple& tuple);

/// det[d f_i / d x_j] for n polynomials in n variables.
Polynomial jacobian(std::span<const Polynomial> fs);

/// {f_1, ..., f_n} = J(f_1, ..., f_n, C) on K[x_1, ..., x_{n+1}].
class JacobianBracket {
public:
  JacobianBracket(Polynomial casimir, std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  const Polynomial& casimir() const noexcept { return casimir_; }
  const ContextPtr& context() const noexcept { return casimir_.context(); }

  Polynomial operator()(std::span<const Polynomial> fs) const;
  /// Bracket of generators x_t1, ..., x_tn.
  Polynomial on_generators(std::span<const std::size_t> tuple) const;
  /// (-1)^{n-i+1} dC/dx_i on the tuple that omits x_i.
  StructureTable generator_table() const;

private:
  Polynomial casimir_;
  std::size_t arity_;
};

/// The unique multi-derivation extending a StructureTable:
/// {f_1..f_n} = sum_{i_1<...<i_n} det(d f_a / d e_{i_b}) [e_{i_1}, ..., e_{i_n}].
class TableBracket {
public:
  explicit TableBracket(StructureTable table);

  std::size_t arity() const noexcept { return table_.arity(); }
  const StructureTable& table() const noexcept { return table_; }
  const ContextPtr& context() const noexcept { return table_.context(); }

  Polynomial operator()(std::span<const Polynomial> fs) const;
  Polynomial on_generators(std::span<const std::size_t> tuple) const { return table_.get(tuple); }

private:
  StructureTable table_;
};

/// Either bracket construction behind one interface.
class Bracket {
public:
  Bracket(JacobianBracket b) : impl_(std::move(b)) {}
  Bracket(TableBracket b) : impl_(std::move(b)) {}

  std::size_t arity() const noexcept;
  const ContextPtr& context() const noexcept;
  std::size_t num_generators() const noexcept { return context()->size(); }

  Polynomial operator()(std::span<const Polynomial> fs) const;
  Polynomial operator()(std::initializer_list<Polynomial> fs) const {
    return (*this)(std::span<const Polynomial>(fs.begin(), fs.size()));
  }
  Polynomial on_generators(std::span<const std::size_t> tuple) const;

  const JacobianBracket* as_jacobian() const noexcept { return std::get_if<JacobianBracket>(&impl_); }
  const TableBracket* as_table() const noexcept { return std::get_if<TableBracket>(&impl_); }

private:
  std::variant<JacobianBracket, TableBracket> impl_;
};

Polynomial jb_eval(const JacobianBracket& b, std::span<const Polynomial> fs);
Polynomial tb_eval(const TableBracket& b, std::span<const Polynomial> fs);

/// {{a,b},c} - {{a,c},b} - {a,{b,c}} for a binary bracket.
Polynomial ternary_jacobian(const Bracket& b, const Polynomial& a, const Polynomial& x,
                            const Polynomial& c);

/// All strictly increasing k-tuples drawn from {0, ..., n-1}.
std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k);

} // namespace nambu
