#include "nambu/analysis.hpp"
#include "nambu/error.hpp"
#include "nambu/expr.hpp"
#include "nambu/identities.hpp"
#include "nambu/structures.hpp"

#include <gtest/gtest.h>

using namespace nambu;

namespace {

Polynomial gen(const AlgebraSpec& s, std::string_view name) {
  return Polynomial::variable(s.bracket.context(), name);
}

Polynomial br(const AlgebraSpec& s, std::string_view a, std::string_view b) {
  return s.bracket({gen(s, a), gen(s, b)});
}

void expect_casimir_central(const AlgebraSpec& s) {
  ASSERT_TRUE(s.casimir.has_value()) << s.name;
  for (std::size_t i = 0; i < s.bracket.num_generators(); ++i) {
    std::vector<Polynomial> args{*s.casimir};
    for (std::size_t k = 1; k < s.bracket.arity(); ++k) {
      args.push_back(Polynomial::variable(s.bracket.context(), (i + k) % s.bracket.num_generators()));
    }
    EXPECT_TRUE(s.bracket(args).is_zero()) << s.name << " slot " << i;
  }
  EXPECT_TRUE(center_membership(s.bracket, *s.casimir).member) << s.name;
}

} // namespace

TEST(Sl2, TableAndJacobianFormAgree) {
  const auto s = make_sl2();
  ASSERT_TRUE(s.jacobian_form.has_value());
  EXPECT_EQ(br(s, "h", "e"), 2 * gen(s, "e"));
  EXPECT_EQ(br(s, "h", "f"), -2 * gen(s, "f"));
  EXPECT_EQ(br(s, "e", "f"), gen(s, "h"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::vector<Polynomial> args{Polynomial::variable(s.bracket.context(), i),
                                         Polynomial::variable(s.bracket.context(), j)};
      EXPECT_EQ(s.bracket(args), jb_eval(*s.jacobian_form, args));
    }
  }
  EXPECT_TRUE(br(s, "e", "e").is_zero());
  expect_casimir_central(s);
  EXPECT_EQ(*s.casimir, parse_polynomial("1/2 h^2 + 2 e f", s.bracket.context()));
}

TEST(NLie, DiagonalForm) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Rational> alphas;
    for (std::size_t i = 0; i <= n; ++i) alphas.emplace_back(static_cast<long>(2 * i) - 3, 2);
    const auto s = make_nlie_diagonal(alphas);
    EXPECT_EQ(s.bracket.arity(), n);
    for (std::size_t i = 0; i <= n; ++i) {
      IndexTuple t;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j != i) t.push_back(j);
      }
      EXPECT_EQ(s.bracket.on_generators(t), alphas[i] * Polynomial::variable(s.bracket.context(), i));
    }
    EXPECT_TRUE(verify_filippov_generators(s.bracket).pass);
    expect_casimir_central(s);
  }
}

TEST(NLie, SimpleFlagFollowsGramDeterminant) {
  const auto x = indexed_context("x", 4);
  const auto sum = make_nlie(parse_polynomial("x1^2 + x2^2 + x3^2 + x4^2", x));
  ASSERT_TRUE(sum.simple.has_value());
  EXPECT_TRUE(*sum.simple);
  const auto degenerate = make_nlie(parse_polynomial("x1^2", x));
  ASSERT_TRUE(degenerate.simple.has_value());
  EXPECT_FALSE(*degenerate.simple);
  EXPECT_TRUE(verify_filippov_generators(degenerate.bracket).pass);

  EXPECT_THROW(make_nlie(parse_polynomial("x1^3 + x2^2", x)), DomainError);
  EXPECT_THROW(make_nlie(parse_polynomial("x1 + x2", x)), DomainError);
}

TEST(NLie, GramMatrixAndDeterminant) {
  const auto x = indexed_context("x", 3);
  const auto g = gram_matrix(parse_polynomial("x1^2 + 2 x1 x2 + 3 x3^2", x));
  const std::vector<std::vector<Rational>> expected{{2, 2, 0}, {2, 0, 0}, {0, 0, 6}};
  EXPECT_EQ(g, expected);
  EXPECT_EQ(determinant(g), Rational(-24));
  EXPECT_EQ(determinant({{0, 1}, {1, 0}}), Rational(-1));
}

TEST(Elliptic, Tables) {
  const auto zero = make_elliptic(0);
  EXPECT_EQ(br(zero, "x", "y"), gen(zero, "z").pow(2));
  for (const Rational& alpha : {Rational(1), Rational(2), Rational(-1, 3)}) {
    const auto s = make_elliptic(alpha);
    const auto x = gen(s, "x"), y = gen(s, "y"), z = gen(s, "z");
    EXPECT_EQ(br(s, "x", "y"), -alpha * x * y + z * z);
    EXPECT_EQ(br(s, "y", "z"), -alpha * y * z + x * x);
    EXPECT_EQ(br(s, "z", "x"), -alpha * z * x + y * y);
    expect_casimir_central(s);
    EXPECT_EQ(s.parameters.at("alpha"), alpha);
  }
}

TEST(MalcevCanonical, CyclicRule) {
  const auto s = make_malcev_canonical();
  EXPECT_EQ(br(s, "e1", "e2"), gen(s, "e4"));
  EXPECT_EQ(br(s, "e2", "e3"), gen(s, "e5"));
  // Built independently: [e_i, e_{i+1}] = e_{i+3} and its cyclic rotations.
  const auto& ctx = s.bracket.context();
  StructureTable expected(ctx, 2);
  for (std::size_t i = 0; i < 7; ++i) {
    const std::size_t a = i, b = (i + 1) % 7, c = (i + 3) % 7;
    expected.set({a, b}, Polynomial::variable(ctx, c));
    expected.set({b, c}, Polynomial::variable(ctx, a));
    expected.set({c, a}, Polynomial::variable(ctx, b));
  }
  EXPECT_EQ(expected.entries().size(), 21u);
  EXPECT_TRUE(s.bracket.as_table()->table() == expected);
  expect_casimir_central(s);
}

TEST(MalcevAbg, ExcerptAndSpecialization) {
  const auto s = make_malcev_abg(2, 3, 5);
  EXPECT_EQ(br(s, "f1", "f2"), gen(s, "f4"));
  EXPECT_EQ(br(s, "f2", "f4"), 3 * gen(s, "f1"));
  EXPECT_EQ(br(s, "f5", "f6"), 15 * gen(s, "f1"));

  const auto one = make_malcev_abg(1, 1, 1);
  const auto canon = make_malcev_canonical();
  const auto& ft = one.bracket.as_table()->table();
  const auto& et = canon.bracket.as_table()->table();
  ASSERT_EQ(ft.entries().size(), et.entries().size());
  for (const auto& [tuple, value] : et.entries()) {
    // Renaming f_i -> e_i keeps indices, so compare by term lists.
    const auto fv = ft.get(tuple);
    ASSERT_EQ(fv.size(), value.size());
    EXPECT_EQ(fv.terms()[0].monomial, value.terms()[0].monomial);
    EXPECT_EQ(fv.terms()[0].coeff, value.terms()[0].coeff);
  }
  EXPECT_THROW(make_malcev_abg(0, 1, 1), DomainError);
}

TEST(MalcevAbg, CasimirOnGrid) {
  for (int a = 1; a <= 3; ++a) {
    for (int b = -2; b <= 3; b += 5) {
      for (int c = 1; c <= 3; ++c) {
        const auto s = make_malcev_abg(a, b, Rational(c, 2));
        expect_casimir_central(s);
      }
    }
  }
}

TEST(MalcevSplittable, Table) {
  const auto s = make_malcev_splittable();
  EXPECT_EQ(br(s, "x", "x'"), gen(s, "h"));
  EXPECT_EQ(br(s, "x", "y"), 2 * gen(s, "z'"));
  EXPECT_EQ(br(s, "x'", "y'"), -2 * gen(s, "z"));
  // Each of (h, x, x'), (h, y, y'), (h, z, z') spans a copy of sl2.
  for (const auto& [u, v] : {std::pair{"x", "x'"}, std::pair{"y", "y'"}, std::pair{"z", "z'"}}) {
    EXPECT_EQ(br(s, "h", u), 2 * gen(s, u));
    EXPECT_EQ(br(s, "h", v), -2 * gen(s, v));
    EXPECT_EQ(br(s, u, v), gen(s, "h"));
  }
  EXPECT_TRUE(br(s, "x", "z'").is_zero());
  EXPECT_TRUE(br(s, "y", "x'").is_zero());
  EXPECT_EQ(s.bracket.as_table()->table().entries().size(), 15u);
  expect_casimir_central(s);
}

TEST(Registry, ParsesNames) {
  EXPECT_EQ(make_algebra("sl2").name, "sl2");
  EXPECT_EQ(make_algebra("elliptic(1/2)").parameters.at("alpha"), Rational(1, 2));
  EXPECT_EQ(make_algebra("quadric(4)").bracket.arity(), 4u);
  EXPECT_EQ(make_algebra("nlie(1,1,1,1)").bracket.arity(), 3u);
  EXPECT_EQ(make_algebra("malcev-abg(1,2,3)").parameters.at("gamma"), Rational(3));
  EXPECT_EQ(make_algebra("malcev-canonical").bracket.num_generators(), 7u);
  EXPECT_EQ(make_algebra("malcev-splittable").bracket.num_generators(), 7u);
  EXPECT_THROW(make_algebra("so3"), DomainError);
  EXPECT_THROW(make_algebra("elliptic(1"), DomainError);
  EXPECT_THROW(make_algebra("sl2(1)"), DomainError);
  EXPECT_THROW(make_algebra("quadric(1)"), DomainError);
  EXPECT_GE(builtin_algebra_names().size(), 7u);
}

TEST(Registry, EveryCasimirIsCentral) {
  for (const auto& name : {"sl2", "elliptic(0)", "elliptic(2)", "quadric(2)", "quadric(3)", "quadric(4)",
                           "nlie(1,-1,2)", "malcev-canonical", "malcev-abg(1,2,3)", "malcev-splittable"}) {
    expect_casimir_central(make_algebra(name));
  }
  const auto ctx = make_context({"x", "y", "z"});
  expect_casimir_central(make_jacobian_algebra(parse_polynomial("x^2 y + z", ctx), 2));
}

TEST(Describe, ListsEntries) {
  const auto text = describe(make_sl2());
  EXPECT_NE(text.find("[e, f] = h"), std::string::npos) << text;
  EXPECT_NE(text.find("[e, h] = -2*e"), std::string::npos) << text;
}
