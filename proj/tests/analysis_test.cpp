#include "nambu/analysis.hpp"
#include "nambu/error.hpp"
#include "nambu/expr.hpp"
#include "nambu/random_poly.hpp"
#include "nambu/structures.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nambu;

namespace {

const ContextPtr xyz = make_context({"x", "y", "z"});

Polynomial P(std::string_view text, const ContextPtr& ctx = xyz) { return parse_polynomial(text, ctx); }

bool has_pure_power(const Polynomial& c) {
  for (const auto& t : c.terms()) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < c.num_vars(); ++i) support += t.monomial[i] ? 1 : 0;
    if (support == 1) return true;
  }
  return false;
}

QuotientContext quotient_of(const AlgebraSpec& s, const Rational& lambda) {
  return QuotientContext(s.bracket, *s.casimir, lambda);
}

// Drops every term of degree above d.
Polynomial truncate(const Polynomial& p, unsigned d) {
  Polynomial out(p.context());
  for (const auto& [deg, comp] : p.homogeneous_components()) {
    if (deg <= d) out += comp;
  }
  return out;
}

// Rank of a list of polynomials as coefficient vectors, by elimination on
// leading terms.
std::size_t span_rank(std::vector<Polynomial> ps) {
  std::vector<Polynomial> basis;
  for (auto p : ps) {
    for (const auto& b : basis) {
      const Rational c = p.coefficient(b.leading_term().monomial);
      if (c != 0) p -= c * b;
    }
    if (p.is_zero()) continue;
    p = p.monic();
    for (auto& b : basis) {
      const Rational c = b.coefficient(p.leading_term().monomial);
      if (c != 0) b -= c * p;
    }
    basis.push_back(p);
  }
  return basis.size();
}

} // namespace

TEST(KthRoot, Examples) {
  const auto sq = kth_root(P("(x + y)^2"), 2);
  ASSERT_TRUE(sq.root.has_value());
  EXPECT_EQ(*sq.root, P("x + y"));
  EXPECT_EQ(sq.alpha, Rational(1));

  EXPECT_FALSE(kth_root(P("x^2 + y^2"), 2).root.has_value());

  const auto cube = kth_root(P("8 (x + 2y)^3"), 3);
  ASSERT_TRUE(cube.root.has_value());
  EXPECT_EQ(*cube.root, P("x + 2y"));
  EXPECT_EQ(cube.alpha, Rational(8));

  // No pure power of any variable: the shear path.
  const auto sheared = kth_root(P("(x y + y z + x z)^2"), 2);
  ASSERT_TRUE(sheared.root.has_value());
  EXPECT_EQ(*sheared.root, P("x y + x z + y z"));

  EXPECT_FALSE(kth_root(P("x^3 + y^3"), 2).root.has_value());
  EXPECT_THROW(kth_root(P("x^2 + y"), 2), DomainError);
  EXPECT_THROW(kth_root(P("x^2"), 1), DomainError);
}

TEST(Closedness, Examples) {
  const auto efh = make_context({"e", "f", "h"});
  EXPECT_TRUE(is_closed_homogeneous(P("1/2 h^2 + 2 e f", efh)).closed);
  EXPECT_TRUE(is_closed_homogeneous(P("1/3 (x^3 + y^3 + z^3) - x y z")).closed);

  const auto quartic = is_closed_homogeneous(P("(x + y + z)^4"));
  EXPECT_FALSE(quartic.closed);
  ASSERT_TRUE(quartic.witness.has_value());
  EXPECT_EQ(quartic.witness->k, 4u);
  EXPECT_EQ(*quartic.witness->root, P("x + y + z"));
  EXPECT_EQ(quartic.witness->alpha, Rational(1));

  EXPECT_TRUE(is_closed_homogeneous(P("x")).closed);
  EXPECT_FALSE(is_closed_homogeneous(P("-5 x^2 y^2")).closed);
}

TEST(MinimalRoot, Examples) {
  EXPECT_EQ(minimal_root_homogeneous(P("(x + y)^6")), P("x + y"));
  const auto closed = P("3 x^2 + y z");
  EXPECT_EQ(minimal_root_homogeneous(closed), closed.monic());
  const auto r = minimal_root_homogeneous(P("(x^2 + y^2)^2"));
  EXPECT_EQ(r, P("x^2 + y^2"));
  EXPECT_TRUE(is_closed_homogeneous(r).closed);
}

TEST(CenterMembership, JacobianExamples) {
  const auto quad = make_quadric(2);
  const auto& c = *quad.casimir;
  const auto& jb = *quad.jacobian_form;
  EXPECT_TRUE(center_membership_jacobian(jb, c).member);
  EXPECT_TRUE(center_membership_jacobian(jb, c * c + 3 * c).member);
  const auto x1 = Polynomial::variable(c.context(), 0);
  const auto r = center_membership_jacobian(jb, x1);
  EXPECT_FALSE(r.member);
  ASSERT_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) EXPECT_FALSE(w.value.is_zero());

  // In the quotient, anything congruent to a constant is central.
  const auto q = quotient_of(quad, 2);
  EXPECT_TRUE(center_membership_jacobian(jb, c * x1 - 2 * x1 + Polynomial::constant(c.context(), 1), &q).member);
  EXPECT_FALSE(center_membership_jacobian(jb, c * x1 - x1, &q).member);
  EXPECT_TRUE(center_membership(quad.bracket, c * c - c, &q).member);
}

TEST(CenterMembership, TableExamples) {
  const auto canon = make_malcev_canonical();
  EXPECT_TRUE(center_membership_table(*canon.bracket.as_table(), *canon.casimir).member);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const auto s = make_malcev_abg(a, b, a + b);
      EXPECT_TRUE(center_membership_table(*s.bracket.as_table(), *s.casimir).member);
    }
  }
  const auto split = make_malcev_splittable();
  const auto h = Polynomial::variable(split.bracket.context(), "h");
  const auto r = center_membership_table(*split.bracket.as_table(), h);
  EXPECT_FALSE(r.member);
  bool saw_x = false;
  for (const auto& w : r.witnesses) {
    if (w.tuple == IndexTuple{1}) {
      saw_x = true;
      EXPECT_EQ(w.value, 2 * Polynomial::variable(split.bracket.context(), "x"));
    }
  }
  EXPECT_TRUE(saw_x);
}

TEST(CenterMembership, PowersOfCasimirAreCentral) {
  for (const auto& name : {"sl2", "elliptic(1)", "elliptic(0)", "quadric(2)", "quadric(3)", "quadric(4)",
                           "malcev-canonical", "malcev-splittable", "nlie(1,2,3)"}) {
    const auto s = make_algebra(name);
    Polynomial power = *s.casimir;
    for (int j = 1; j <= 3; ++j) {
      EXPECT_TRUE(center_membership(s.bracket, power).member) << name << " j=" << j;
      power *= *s.casimir;
    }
  }
}

TEST(JacobianDependence, Examples) {
  EXPECT_FALSE(jacobian_dependence(std::vector<Polynomial>{P("x"), P("y")}));
  EXPECT_EQ(jacobian_rank(std::vector<Polynomial>{P("x"), P("y")}), 2u);
  const auto f = P("x^2 y - z + 3");
  EXPECT_TRUE(jacobian_dependence(std::vector<Polynomial>{f, f * f + Polynomial::constant(xyz, 1)}));
  const auto xy = make_context({"x", "y"});
  EXPECT_TRUE(jacobian_dependence(std::vector<Polynomial>{P("x + y", xy), P("(x + y)^3 - 2", xy)}));
  EXPECT_EQ(jacobian_rank(std::vector<Polynomial>{P("x + y", xy), P("(x + y)^3 - 2", xy)}), 1u);
  EXPECT_EQ(jacobian_rank(std::vector<Polynomial>{P("x y"), P("y z"), P("x z")}), 3u);
}

TEST(Saturation, Examples) {
  const auto sphere = make_quadric(2);
  const auto q = quotient_of(sphere, 1);
  const auto r = saturate_poisson_ideal(q, std::vector<Polynomial>{Polynomial::variable(q.context(), 0)});
  EXPECT_EQ(r.verdict, Verdict::WholeRing);
  ASSERT_TRUE(r.final_basis.has_value());
  EXPECT_EQ(r.final_basis->generators()[0], Polynomial::constant(q.context(), 1));
  EXPECT_EQ(r.basis_sizes.size(), r.rounds);

  const auto square = make_jacobian_algebra(P("(x + y + z)^2"), 2);
  const auto qs = quotient_of(square, 1);
  const auto neg = saturate_poisson_ideal(qs, std::vector<Polynomial>{P("x + y + z - 1")});
  EXPECT_EQ(neg.verdict, Verdict::ProperStable);
  ASSERT_TRUE(neg.final_basis.has_value());
  EXPECT_FALSE(contains_one(*neg.final_basis));
  // Proper-stable means closed under one more round of bracketing.
  for (const auto& g : neg.final_basis->generators()) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = square.bracket({Polynomial::variable(qs.context(), i), g});
      EXPECT_TRUE(normal_form(v, *neg.final_basis).is_zero());
    }
  }

  const auto split = make_malcev_splittable();
  const auto qm = quotient_of(split, 1);
  const auto m = saturate_poisson_ideal(qm, std::vector<Polynomial>{Polynomial::variable(qm.context(), "h")});
  EXPECT_EQ(m.verdict, Verdict::WholeRing);
}

TEST(Saturation, OrderDoesNotChangeVerdict) {
  const auto ell = make_elliptic(1);
  const auto q = quotient_of(ell, -1);
  SaturationOptions lex;
  lex.order = MonomialOrder::lex();
  for (const auto& seed : {P("x"), P("y z - 2")}) {
    const auto a = saturate_poisson_ideal(q, std::vector<Polynomial>{seed});
    const auto b = saturate_poisson_ideal(q, std::vector<Polynomial>{seed}, lex);
    EXPECT_EQ(a.verdict, Verdict::WholeRing);
    EXPECT_EQ(b.verdict, a.verdict);
  }
}

TEST(Saturation, BudgetExhaustionIsAVerdict) {
  const auto ell = make_elliptic(1);
  const auto q = quotient_of(ell, 1);
  SaturationOptions tight;
  tight.step_budget = 5;
  const auto r = saturate_poisson_ideal(q, std::vector<Polynomial>{P("x")}, tight);
  EXPECT_EQ(r.verdict, Verdict::BudgetExhausted);
  EXPECT_EQ(to_string(r.verdict), "budget-exhausted");

  SaturationOptions one_round;
  one_round.max_rounds = 1;
  EXPECT_EQ(saturate_poisson_ideal(q, std::vector<Polynomial>{P("x")}, one_round).verdict,
            Verdict::BudgetExhausted);
}

TEST(CenterProbe, Examples) {
  const auto sl2 = make_sl2();
  const auto q = quotient_of(sl2, 1);
  const auto basis = center_probe_quotient(q, 2);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], Polynomial::constant(q.context(), 1));

  const auto quad = make_quadric(3);
  const auto qq = quotient_of(quad, 1);
  const auto qb = center_probe_quotient(qq, 2);
  ASSERT_EQ(qb.size(), 1u);
  EXPECT_TRUE(qb[0].is_constant());

  for (const auto& name : {"sl2", "quadric(2)", "elliptic(1)"}) {
    const auto s = make_algebra(name);
    const auto ab = center_probe_ambient(s.bracket, static_cast<unsigned>(s.casimir->degree()));
    ASSERT_EQ(ab.size(), 2u) << name;
    EXPECT_EQ(ab[0], s.casimir->monic()) << name;
    EXPECT_EQ(ab[1], Polynomial::constant(s.bracket.context(), 1)) << name;
  }
}

// ------------------------------------------------------------- properties

class AnalysisProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AnalysisProperty, PlantedRootsAreRecovered) {
  PolyRng rng(GetParam());
  for (int t = 0; t < 15; ++t) {
    const auto ctx = indexed_context("x", static_cast<std::size_t>(rng.uniform(1, 4)));
    const auto d = static_cast<unsigned>(rng.uniform(1, 3));
    const auto k = static_cast<unsigned>(rng.uniform(2, 4));
    const auto c = rng.homogeneous(ctx, d, 5, 3);
    const Rational alpha = test::random_fraction(rng, 9, 4);
    const auto C = alpha * c.pow(k);
    const auto r = kth_root(C, k);
    ASSERT_TRUE(r.root.has_value()) << C.to_string();
    EXPECT_EQ(r.alpha * r.root->pow(k), C);
    EXPECT_EQ(*r.root, c.monic());
  }
}

TEST_P(AnalysisProperty, KthRootIsVerified) {
  PolyRng rng(GetParam());
  const auto ctx = indexed_context("x", 3);
  for (int t = 0; t < 30; ++t) {
    auto c = rng.homogeneous(ctx, static_cast<unsigned>(rng.uniform(2, 6)), 9, 5);
    if (!has_pure_power(c)) c += Polynomial::term(ctx, Monomial::variable(0, static_cast<unsigned>(c.degree())), 1);
    for (unsigned k = 2; k <= static_cast<unsigned>(c.degree()); ++k) {
      const auto r = kth_root(c, k);
      if (r.root) {
        EXPECT_EQ(r.alpha * r.root->pow(k), c);
      }
    }
  }
}

TEST_P(AnalysisProperty, MinimalRootIsClosed) {
  PolyRng rng(GetParam());
  const auto ctx = indexed_context("x", 3);
  for (int t = 0; t < 15; ++t) {
    const auto c = rng.homogeneous(ctx, static_cast<unsigned>(rng.uniform(1, 2)), 5, 3);
    const auto C = c.pow(static_cast<unsigned>(rng.uniform(1, 3)));
    const auto r = minimal_root_homogeneous(C);
    EXPECT_TRUE(is_closed_homogeneous(r).closed) << r.to_string();
    EXPECT_EQ(r.leading_term().coeff, Rational(1));
  }
}

TEST_P(AnalysisProperty, CompositionIsDependent) {
  PolyRng rng(GetParam());
  const auto ctx = indexed_context("x", 3);
  for (int t = 0; t < 15; ++t) {
    const auto f = rng.poly(ctx, 2, 5, 3);
    if (f.is_constant()) continue;
    Polynomial g(ctx);
    const auto deg = rng.uniform(1, 3);
    for (int i = 0; i <= deg; ++i) g += Rational(rng.uniform(-5, 5)) * f.pow(static_cast<unsigned>(i));
    EXPECT_TRUE(jacobian_dependence(std::vector<Polynomial>{f, g}));
    EXPECT_EQ(jacobian_rank(std::vector<Polynomial>{f}), 1u);
  }
}

TEST_P(AnalysisProperty, ProbeTruncationIsConsistent) {
  (void)GetParam();
  for (const auto& name : {"sl2", "quadric(2)"}) {
    const auto s = make_algebra(name);
    for (unsigned d = 2; d <= 4; ++d) {
      const auto high = center_probe_ambient(s.bracket, d);
      const auto low = center_probe_ambient(s.bracket, d - 1);
      std::vector<Polynomial> truncated;
      for (const auto& p : high) truncated.push_back(truncate(p, d - 1));
      EXPECT_EQ(span_rank(truncated), low.size()) << name << " d=" << d;
      // Every lower-degree solution is still a solution.
      auto combined = high;
      combined.insert(combined.end(), low.begin(), low.end());
      EXPECT_EQ(span_rank(combined), high.size()) << name << " d=" << d;
    }
  }
  const auto q = quotient_of(make_sl2(), 1);
  for (unsigned d = 1; d <= 3; ++d) {
    EXPECT_EQ(center_probe_quotient(q, d).size(), 1u);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AnalysisProperty, ::testing::Values(1u, 2u, 31u));
