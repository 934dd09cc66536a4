#pragma once

#include "nambu/error.hpp"
#include "nambu/polynomial.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nambu {

/// Syntax error with the byte offset of the offending token and the tokens
/// that would have been accepted there.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Variable, Sum, Product, Power, Negation };

  Kind kind;
  std::size_t offset = 0;
  Rational value;          // Literal
  std::string name;        // Variable
  unsigned exponent = 0;   // Power
  std::vector<ExprPtr> children;
};

/// Grammar, loosest first:
///   expr    := unary (('+' | '-') unary)*
///   unary   := ('-' | '+') unary | term
///   term    := factor ('*'? factor)*
///   factor  := primary ('^' integer)?
///   primary := integer ('/' integer)? | identifier | '(' expr ')'
/// Identifiers are [A-Za-z_][A-Za-z0-9_]* with at most one trailing prime.
ExprPtr parse_expression(std::string_view text);

/// Identifiers exactly as written.
std::set<std::string> identifiers(const Expr& e);

/// Variables named by an expression when no context is given: each identifier
/// is read as a run of atoms letter digits* '?, so "2ef" names e and f and
/// "e1e2" names e1 and e2. Sorted by letter, then index, then prime.
ContextPtr infer_context(const Expr& e);

/// Lowers to a polynomial. An identifier that is not a variable of `ctx` is
/// accepted when it splits in exactly one way into variable names.
Polynomial lower(const Expr& e, const ContextPtr& ctx);

/// parse + lower; infers the context when `ctx` is null.
Polynomial parse_polynomial(std::string_view text, ContextPtr ctx = nullptr);

/// Fully parenthesized text of an AST, for debugging and round-trips.
std::string to_string(const Expr& e);

} // namespace nambu
