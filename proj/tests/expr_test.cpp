#include "nambu/error.hpp"
#include "nambu/expr.hpp"
#include "nambu/random_poly.hpp"
#include "nambu/structures.hpp"

#include <gtest/gtest.h>

using namespace nambu;

namespace {

std::vector<std::string> names(const ContextPtr& ctx) { return ctx->names(); }

ParseError parse_error_of(std::string_view text) {
  try {
    parse_expression(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return ParseError(0, {}, "");
}

bool expects(const ParseError& e, std::string_view token) {
  for (const auto& t : e.expected()) {
    if (t == token) return true;
  }
  return false;
}

} // namespace

TEST(Parse, Examples) {
  const auto efh = make_context({"e", "f", "h"});
  EXPECT_EQ(parse_polynomial("1/2 h^2 + 2 e f", efh), make_sl2().casimir.value());
  const auto quadric = parse_polynomial("x^2+y^2+z^2");
  EXPECT_EQ(names(quadric.context()), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(quadric.to_string(), "x^2 + y^2 + z^2");

  const auto e = parse_error_of("x''");
  EXPECT_EQ(e.offset(), 2u);
}

TEST(Parse, Precedence) {
  const auto xy = make_context({"x", "y"});
  EXPECT_EQ(parse_polynomial("-x^2", xy), -parse_polynomial("x^2", xy));
  EXPECT_EQ(parse_polynomial("2x^2", xy), parse_polynomial("2*(x^2)", xy));
  EXPECT_EQ(parse_polynomial("x - y + 1", xy), parse_polynomial("(x - y) + 1", xy));
  EXPECT_EQ(parse_polynomial("x y^2", xy), parse_polynomial("x*(y^2)", xy));
  EXPECT_EQ(parse_polynomial("(x + y)^2", xy), parse_polynomial("x^2 + 2 x y + y^2", xy));
  EXPECT_EQ(parse_polynomial("- -x", xy), parse_polynomial("x", xy));
  EXPECT_EQ(parse_polynomial("3/6 x", xy), parse_polynomial("1/2 x", xy));
  EXPECT_EQ(parse_polynomial("x^0", xy), parse_polynomial("1", xy));
}

TEST(Parse, Ast) {
  const auto e = parse_expression("1/2 h^2 + 2 e f");
  ASSERT_EQ(e->kind, Expr::Kind::Sum);
  ASSERT_EQ(e->children.size(), 2u);
  const auto& first = *e->children[0];
  ASSERT_EQ(first.kind, Expr::Kind::Product);
  EXPECT_EQ(first.children[0]->kind, Expr::Kind::Literal);
  EXPECT_EQ(first.children[0]->value, Rational(1, 2));
  EXPECT_EQ(first.children[1]->kind, Expr::Kind::Power);
  EXPECT_EQ(first.children[1]->exponent, 2u);
  EXPECT_EQ(identifiers(*e), (std::set<std::string>{"e", "f", "h"}));
  EXPECT_EQ(to_string(*parse_expression("x - y")), "(x + (-y))");
}

TEST(Parse, Errors) {
  auto e = parse_error_of("x +");
  EXPECT_EQ(e.offset(), 3u);
  EXPECT_TRUE(expects(e, "number"));
  EXPECT_TRUE(expects(e, "identifier"));

  e = parse_error_of("(x + y");
  EXPECT_EQ(e.offset(), 6u);
  EXPECT_TRUE(expects(e, "')'"));

  e = parse_error_of("x^y");
  EXPECT_EQ(e.offset(), 2u);
  EXPECT_TRUE(expects(e, "non-negative integer exponent"));

  e = parse_error_of("x^-1");
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error_of("1/0");
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error_of("x ) y");
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error_of("x $ y");
  EXPECT_EQ(e.offset(), 2u);
  EXPECT_EQ(e.found(), "character '$'");

  e = parse_error_of("x^99999");
  EXPECT_EQ(e.offset(), 2u);

  e = parse_error_of("");
  EXPECT_EQ(e.offset(), 0u);
  EXPECT_THROW(parse_expression("2 * * x"), ParseError);
  EXPECT_THROW(parse_expression("x''"), Error);
}

TEST(Parse, PrimedIdentifiers) {
  const auto split = make_malcev_splittable();
  const auto& ctx = split.bracket.context();
  const auto c = parse_polynomial("-(x x' + y y' + z z' + 1/4 h^2)", ctx);
  EXPECT_EQ(c, *split.casimir);
  EXPECT_EQ(parse_polynomial("xx'", ctx), parse_polynomial("x x'", ctx));
}

TEST(InferContext, SplitsJuxtaposedAtoms) {
  EXPECT_EQ(names(infer_context(*parse_expression("2ef + 1/2 h^2"))), (std::vector<std::string>{"e", "f", "h"}));
  EXPECT_EQ(names(infer_context(*parse_expression("e1e2 + e10"))), (std::vector<std::string>{"e1", "e2", "e10"}));
  EXPECT_EQ(names(infer_context(*parse_expression("x' + x + y"))), (std::vector<std::string>{"x", "x'", "y"}));
  EXPECT_EQ(parse_polynomial("2ef"), parse_polynomial("2 e f"));
}

TEST(Lower, UnknownIdentifiers) {
  const auto xy = make_context({"x", "y"});
  EXPECT_THROW(parse_polynomial("x + w", xy), DomainError);
  EXPECT_EQ(parse_polynomial("xy", xy), parse_polynomial("x y", xy));
  // "ab" splits two ways when both "ab" and "a","b" exist; the exact name wins.
  const auto ab = make_context({"a", "b", "ab"});
  EXPECT_EQ(parse_polynomial("ab", ab), Polynomial::variable(ab, 2));
}

TEST(RoundTrip, PolynomialPrinting) {
  std::vector<std::pair<std::string, ContextPtr>> corpus;
  for (const auto& name : builtin_algebra_names()) {
    std::string concrete = name;
    if (auto open = concrete.find('('); open != std::string::npos) {
      concrete = concrete.substr(0, open);
      if (concrete == "elliptic") concrete = "elliptic(-2/3)";
      if (concrete == "quadric") concrete = "quadric(3)";
      if (concrete == "nlie") concrete = "nlie(1,-1,1/2,2)";
      if (concrete == "malcev-abg") concrete = "malcev-abg(2,3,5)";
    }
    const auto spec = make_algebra(concrete);
    corpus.emplace_back(spec.casimir->to_string(), spec.bracket.context());
    const StructureTable table = spec.bracket.as_table() ? spec.bracket.as_table()->table()
                                                         : spec.jacobian_form->generator_table();
    for (const auto& [tuple, value] : table.entries()) {
      corpus.emplace_back(value.to_string(), spec.bracket.context());
    }
  }
  PolyRng rng(77);
  for (int t = 0; t < 50; ++t) {
    const auto ctx = make_context({"x", "y'", "z1", "w"});
    corpus.emplace_back(rng.poly(ctx, 4, 50, 6).to_string(), ctx);
  }
  for (const auto& [text, ctx] : corpus) {
    const auto p = parse_polynomial(text, ctx);
    EXPECT_EQ(p.to_string(), text);
    EXPECT_EQ(parse_polynomial(to_string(*parse_expression(text)), ctx), p) << text;
  }
}
