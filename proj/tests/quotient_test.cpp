#include "nambu/error.hpp"
#include "nambu/expr.hpp"
#include "nambu/quotient.hpp"
#include "nambu/random_poly.hpp"
#include "nambu/structures.hpp"

#include <gtest/gtest.h>

using namespace nambu;

namespace {

QuotientContext quotient_of(const AlgebraSpec& s, const Rational& lambda) {
  return QuotientContext(s.bracket, *s.casimir, lambda);
}

Polynomial P(const QuotientContext& q, std::string_view text) { return parse_polynomial(text, q.context()); }

} // namespace

TEST(QuotientContext, RejectsDegenerateInput) {
  const auto s = make_sl2();
  EXPECT_THROW(QuotientContext(s.bracket, *s.casimir, 0), DomainError);
  EXPECT_THROW(QuotientContext(s.bracket, Polynomial::constant(s.bracket.context(), 3), 1), DomainError);
  const auto q = quotient_of(s, 1);
  EXPECT_EQ(q.m(), 2u);
  EXPECT_EQ(q.modulus_basis().size(), 1u);
}

TEST(QReduce, Examples) {
  for (const auto& s : {make_sl2(), make_elliptic(1), make_quadric(3)}) {
    for (const Rational& lambda : {Rational(1), Rational(-2, 3)}) {
      const auto q = quotient_of(s, lambda);
      EXPECT_EQ(q_reduce(q, *s.casimir), Polynomial::constant(q.context(), lambda));
      PolyRng rng(6);
      for (int t = 0; t < 10; ++t) {
        const auto f = rng.poly(q.context(), 3);
        EXPECT_EQ(q_reduce(q, *s.casimir * f), lambda * q_reduce(q, f));
      }
      for (std::size_t i = 0; i < q.context()->size(); ++i) {
        const auto xi = Polynomial::variable(q.context(), i);
        EXPECT_EQ(q_reduce(q, xi), xi);
      }
    }
  }
}

TEST(QBracket, Examples) {
  const auto sl2 = make_sl2();
  const auto q = quotient_of(sl2, 1);
  EXPECT_EQ(q_bracket(q, std::vector<Polynomial>{P(q, "e"), P(q, "f")}), P(q, "h"));
  PolyRng rng(10);
  for (int t = 0; t < 10; ++t) {
    EXPECT_TRUE(q_bracket(q, std::vector<Polynomial>{*sl2.casimir, rng.poly(q.context(), 3)}).is_zero());
  }
}

TEST(GradeDecompose, Examples) {
  const auto xy = make_context({"x", "y"});
  const auto classes = grade_decompose(parse_polynomial("x^2 + x + 1", xy), 2);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].residue, 0u);
  EXPECT_EQ(classes[0].representative, parse_polynomial("x^2 + 1", xy));
  EXPECT_EQ(classes[1].residue, 1u);
  EXPECT_EQ(classes[1].representative, parse_polynomial("x", xy));

  const auto prod = grade_decompose(parse_polynomial("x", xy) * parse_polynomial("y", xy), 2);
  ASSERT_EQ(prod.size(), 1u);
  EXPECT_EQ(prod[0].residue, 0u);

  const auto cubic = grade_decompose(parse_polynomial("x^2 y - y^3", xy), 3);
  ASSERT_EQ(cubic.size(), 1u);
  EXPECT_EQ(cubic[0].residue, 0u);
  EXPECT_TRUE(grade_decompose(Polynomial(xy), 3).empty());
}

TEST(BracketGrade, Examples) {
  const auto sl2 = quotient_of(make_sl2(), 1);
  const std::vector<unsigned> ones{1, 1};
  EXPECT_EQ(bracket_grade_check(sl2, ones), 1u);
  EXPECT_EQ(P(sl2, "h").degree() % 2, 1);

  const auto ell = quotient_of(make_elliptic(1), 1);
  EXPECT_EQ(bracket_grade_check(ell, ones), 2u);

  for (unsigned n = 2; n <= 5; ++n) {
    const std::vector<unsigned> zeros(n, 0);
    // (m - 1 - n) mod m with m = n.
    EXPECT_EQ(bracket_grade(n, zeros), n - 1);
  }
}

TEST(Lift, Examples) {
  const auto sl2 = make_sl2();
  const auto q = quotient_of(sl2, 1);
  const auto h2 = P(q, "h^2");
  EXPECT_EQ(m_homogeneous_lift(q, h2), h2);
  const auto f = P(q, "h^2 + 1");
  const auto lifted = m_homogeneous_lift(q, f);
  EXPECT_EQ(lifted, h2 + *sl2.casimir);
  EXPECT_EQ(q_reduce(q, lifted), q_reduce(q, f));
  EXPECT_TRUE(lifted.is_homogeneous());
  EXPECT_EQ(lifted.degree(), 2);

  const auto ell = make_elliptic(1);
  const auto qe = quotient_of(ell, 1);
  const auto g = P(qe, "x^4 + x");
  EXPECT_EQ(m_homogeneous_lift(qe, g), P(qe, "x^4") + P(qe, "x") * *ell.casimir);

  // With lambda = 2 the correction is scaled by C / lambda.
  const auto q2 = quotient_of(sl2, 2);
  EXPECT_EQ(m_homogeneous_lift(q2, f), h2 + Rational(1, 2) * *sl2.casimir);

  EXPECT_THROW(m_homogeneous_lift(q, P(q, "h^2 + h")), DomainError);
}

// ------------------------------------------------------------- properties

class QuotientProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(QuotientProperty, WellDefinedProduct) {
  PolyRng rng(GetParam());
  for (const auto& s : {make_sl2(), make_elliptic(1), make_quadric(3)}) {
    const auto q = quotient_of(s, 1);
    for (int t = 0; t < 10; ++t) {
      const auto f = rng.poly(q.context(), 3);
      const auto g = rng.poly(q.context(), 3);
      EXPECT_EQ(q_reduce(q, f * g), q_reduce(q, q_reduce(q, f) * q_reduce(q, g)));
    }
  }
}

TEST_P(QuotientProperty, RepresentativeIndependence) {
  PolyRng rng(GetParam());
  for (const auto& s : {make_sl2(), make_elliptic(2), make_quadric(3), make_malcev_splittable()}) {
    const auto q = quotient_of(s, Rational(-3, 2));
    const auto mod = *s.casimir - Polynomial::constant(q.context(), q.lambda());
    const std::size_t n = s.bracket.arity();
    for (int t = 0; t < 5; ++t) {
      std::vector<Polynomial> fs;
      for (std::size_t i = 0; i < n; ++i) fs.push_back(rng.poly(q.context(), 2));
      auto shifted = fs;
      const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      shifted[slot] += mod * rng.poly(q.context(), 2);
      EXPECT_EQ(q_bracket(q, shifted), q_bracket(q, fs)) << s.name;
    }
  }
}

TEST_P(QuotientProperty, GradingSoundness) {
  PolyRng rng(GetParam());
  for (const auto& s : {make_sl2(), make_elliptic(1), make_quadric(3), make_quadric(4)}) {
    const auto q = quotient_of(s, 1);
    const unsigned m = q.m();
    const std::size_t n = s.bracket.arity();
    for (int t = 0; t < 10; ++t) {
      std::vector<Polynomial> fs;
      std::vector<unsigned> residues;
      for (std::size_t i = 0; i < n; ++i) {
        const auto r = static_cast<unsigned>(rng.uniform(0, m - 1));
        residues.push_back(r);
        fs.push_back(rng.m_homogeneous(q.context(), m, r, 4, 9, 3));
      }
      const auto value = q_bracket(q, fs);
      // Independent formula: sum (r_i - 1) + (m - 1) mod m.
      long expected = static_cast<long>(m) - 1;
      for (auto r : residues) expected += static_cast<long>(r) - 1;
      expected = ((expected % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
      EXPECT_EQ(bracket_grade_check(q, residues), static_cast<unsigned>(expected));
      const auto classes = grade_decompose(q, value);
      ASSERT_LE(classes.size(), 1u);
      if (!classes.empty()) {
        EXPECT_EQ(classes[0].residue, static_cast<unsigned>(expected));
      }
    }
  }
}

TEST_P(QuotientProperty, LiftSoundness) {
  PolyRng rng(GetParam());
  for (const auto& s : {make_sl2(), make_elliptic(1), make_quadric(3)}) {
    const auto q = quotient_of(s, 3);
    const unsigned m = q.m();
    for (int t = 0; t < 10; ++t) {
      const auto r = static_cast<unsigned>(rng.uniform(0, m - 1));
      auto f = rng.m_homogeneous(q.context(), m, r, 5, 9, 4);
      while (q_reduce(q, f).is_zero()) f = rng.m_homogeneous(q.context(), m, r, 5, 9, 4);
      const auto lifted = m_homogeneous_lift(q, f);
      EXPECT_TRUE(lifted.is_homogeneous());
      EXPECT_EQ(lifted.degree(), f.degree());
      EXPECT_EQ(q_reduce(q, lifted), q_reduce(q, f));
    }
  }
}

TEST_P(QuotientProperty, NoHomogeneousElementsInModulus) {
  PolyRng rng(GetParam());
  for (const auto& s : {make_sl2(), make_elliptic(1), make_quadric(3)}) {
    const auto q = quotient_of(s, 1);
    for (int t = 0; t < 20; ++t) {
      const auto d = static_cast<unsigned>(rng.uniform(0, 2 * q.m()));
      auto f = rng.homogeneous(q.context(), d, 9, 4);
      // Multiples of C are homogeneous too; none of them may vanish.
      if (d >= q.m() && t % 2 == 0) f = *s.casimir * rng.homogeneous(q.context(), d - q.m(), 9, 3);
      EXPECT_FALSE(q_reduce(q, f).is_zero()) << f.to_string();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, QuotientProperty, ::testing::Values(1u, 5u, 23u));
