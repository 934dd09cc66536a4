#include "nambu/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nambu {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::End:
    return "end of input";
  case Tok::Number:
    return "number '" + t.text + "'";
  case Tok::Ident:
    return "identifier '" + t.text + "'";
  default:
    return "'" + t.text + "'";
  }
}

const std::vector<std::string> kOperand = {"number", "identifier", "'('"};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      out.push_back({Tok::Number, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      if (i < s.size() && s[i] == '\'') {
        ++i;
        if (i < s.size() && s[i] == '\'') {
          throw ParseError(i, {"'+'", "'-'", "'*'", "'^'", "operand", "end of input"},
                           "second prime");
        }
      }
      out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (c) {
    case '+': kind = Tok::Plus; break;
    case '-': kind = Tok::Minus; break;
    case '*': kind = Tok::Star; break;
    case '/': kind = Tok::Slash; break;
    case '^': kind = Tok::Caret; break;
    case '(': kind = Tok::LParen; break;
    case ')': kind = Tok::RParen; break;
    default:
      throw ParseError(i, {"number", "identifier", "operator", "'('", "')'"},
                       "character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, start, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

std::shared_ptr<Expr> make_node(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> children = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->offset = offset;
  e->children = std::move(children);
  return e;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().kind != Tok::End) fail({"'+'", "'-'", "'*'", "operand", "end of input"});
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().offset, std::move(expected), describe(peek()));
  }

  bool starts_operand() const {
    const auto k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  ExprPtr expr() {
    const std::size_t start = peek().offset;
    std::vector<ExprPtr> parts{unary()};
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token op = next();
      auto rhs = unary();
      if (op.kind == Tok::Minus) rhs = make_node(Expr::Kind::Negation, op.offset, {rhs});
      parts.push_back(std::move(rhs));
    }
    return parts.size() == 1 ? parts.front() : make_node(Expr::Kind::Sum, start, std::move(parts));
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Minus) {
      const std::size_t at = next().offset;
      return make_node(Expr::Kind::Negation, at, {unary()});
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return term();
  }

  ExprPtr term() {
    const std::size_t start = peek().offset;
    std::vector<ExprPtr> factors{factor()};
    while (true) {
      if (peek().kind == Tok::Star) {
        next();
        factors.push_back(factor());
      } else if (starts_operand()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front()
                                : make_node(Expr::Kind::Product, start, std::move(factors));
  }

  ExprPtr factor() {
    auto base = primary();
    if (peek().kind != Tok::Caret) return base;
    const std::size_t at = next().offset;
    if (peek().kind != Tok::Number) fail({"non-negative integer exponent"});
    const Token& num = next();
    unsigned long e = 0;
    try {
      e = std::stoul(num.text);
    } catch (const std::exception&) {
      throw ParseError(num.offset, {"exponent below 65536"}, describe(num));
    }
    if (e > 65535) throw ParseError(num.offset, {"exponent below 65536"}, describe(num));
    auto node = make_node(Expr::Kind::Power, at, {base});
    node->exponent = static_cast<unsigned>(e);
    return node;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      std::string text = t.text;
      if (peek().kind == Tok::Slash) {
        next();
        if (peek().kind != Tok::Number) fail({"denominator"});
        const Token& den = next();
        if (den.text.find_first_not_of('0') == std::string::npos) {
          throw ParseError(den.offset, {"nonzero denominator"}, describe(den));
        }
        text += "/" + den.text;
      }
      auto node = make_node(Expr::Kind::Literal, t.offset);
      node->value = parse_rational(text);
      return node;
    }
    if (t.kind == Tok::Ident) {
      next();
      auto node = make_node(Expr::Kind::Variable, t.offset);
      node->name = t.text;
      return node;
    }
    if (t.kind == Tok::LParen) {
      next();
      auto inner = expr();
      if (peek().kind != Tok::RParen) fail({"')'", "'+'", "'-'", "'*'", "operand"});
      next();
      return inner;
    }
    fail(kOperand);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.name);
  for (const auto& c : e.children) collect(*c, out);
}

// letter digits* prime?
std::vector<std::string> atoms(const std::string& ident) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < ident.size()) {
    std::size_t j = i + 1;
    while (j < ident.size() && is_digit(ident[j])) ++j;
    if (j < ident.size() && ident[j] == '\'') ++j;
    out.push_back(ident.substr(i, j - i));
    i = j;
  }
  return out;
}

struct AtomKey {
  std::string letter;
  long index;
  bool prime;
  auto operator<=>(const AtomKey&) const = default;
};

AtomKey atom_key(const std::string& a) {
  AtomKey k{a.substr(0, 1), -1, a.back() == '\''};
  const std::string digits = a.substr(1, a.size() - 1 - (k.prime ? 1 : 0));
  if (!digits.empty()) k.index = std::stol(digits);
  return k;
}

// Splits `ident` into names of ctx; returns all splittings (up to two).
std::vector<std::vector<std::size_t>> splits(const std::string& ident, const VarContext& ctx) {
  std::vector<std::vector<std::vector<std::size_t>>> ways(ident.size() + 1);
  ways[0].push_back({});
  for (std::size_t i = 0; i < ident.size(); ++i) {
    if (ways[i].empty()) continue;
    for (std::size_t v = 0; v < ctx.size(); ++v) {
      const auto& name = ctx.name(v);
      if (ident.compare(i, name.size(), name) != 0) continue;
      for (const auto& w : ways[i]) {
        if (ways[i + name.size()].size() >= 2) break;
        auto ext = w;
        ext.push_back(v);
        ways[i + name.size()].push_back(std::move(ext));
      }
    }
  }
  return ways[ident.size()];
}

} // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("parse error at byte " + std::to_string(offset) + ": expected " +
            join_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::set<std::string> identifiers(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

ContextPtr infer_context(const Expr& e) {
  std::map<AtomKey, std::string> names;
  for (const auto& id : identifiers(e)) {
    for (const auto& a : atoms(id)) names.emplace(atom_key(a), a);
  }
  if (names.empty()) throw DomainError("cannot infer variables from a constant expression");
  std::vector<std::string> out;
  for (auto& [k, n] : names) out.push_back(n);
  return make_context(std::move(out));
}

Polynomial lower(const Expr& e, const ContextPtr& ctx) {
  switch (e.kind) {
  case Expr::Kind::Literal:
    return Polynomial::constant(ctx, e.value);
  case Expr::Kind::Variable: {
    if (auto idx = ctx->index_of(e.name)) return Polynomial::variable(ctx, *idx);
    const auto ways = splits(e.name, *ctx);
    if (ways.empty()) throw DomainError("unknown variable '" + e.name + "'");
    if (ways.size() > 1) {
      throw DomainError("identifier '" + e.name + "' splits into variables in more than one way");
    }
    Polynomial p = Polynomial::constant(ctx, 1);
    for (auto v : ways.front()) p *= Polynomial::variable(ctx, v);
    return p;
  }
  case Expr::Kind::Sum: {
    Polynomial p(ctx);
    for (const auto& c : e.children) p += lower(*c, ctx);
    return p;
  }
  case Expr::Kind::Product: {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& c : e.children) p *= lower(*c, ctx);
    return p;
  }
  case Expr::Kind::Power:
    return lower(*e.children.front(), ctx).pow(e.exponent);
  case Expr::Kind::Negation:
    return -lower(*e.children.front(), ctx);
  }
  throw DomainError("malformed expression");
}

Polynomial parse_polynomial(std::string_view text, ContextPtr ctx) {
  const auto ast = parse_expression(text);
  if (!ctx) ctx = infer_context(*ast);
  return lower(*ast, ctx);
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  switch (e.kind) {
  case Expr::Kind::Literal:
    os << to_string(e.value);
    break;
  case Expr::Kind::Variable:
    os << e.name;
    break;
  case Expr::Kind::Sum:
  case Expr::Kind::Product: {
    const char* sep = e.kind == Expr::Kind::Sum ? " + " : " * ";
    os << "(";
    for (std::size_t i = 0; i < e.children.size(); ++i) os << (i ? sep : "") << to_string(*e.children[i]);
    os << ")";
    break;
  }
  case Expr::Kind::Power:
    os << "(" << to_string(*e.children.front()) << ")^" << e.exponent;
    break;
  case Expr::Kind::Negation:
    os << "(-" << to_string(*e.children.front()) << ")";
    break;
  }
  return os.str();
}

} // namespace nambu
