#include "nambu/suite.hpp"

#include "nambu/analysis.hpp"
#include "nambu/expr.hpp"
#include "nambu/identities.hpp"
#include "nambu/random_poly.hpp"
#include "nambu/structures.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace nambu {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

class Runner {
public:
  Runner(std::string name, std::uint64_t seed) : start_(Clock::now()) {
    report_.suite = std::move(name);
    report_.seed = seed;
  }

  void item(std::string id, int criterion, std::string description,
            const std::function<Outcome()>& fn) {
    SuiteItem it;
    it.id = std::move(id);
    it.criterion = criterion;
    it.description = std::move(description);
    const auto t0 = Clock::now();
    try {
      auto [pass, detail] = fn();
      it.pass = pass;
      it.detail = std::move(detail);
    } catch (const std::exception& e) {
      it.pass = false;
      it.detail = std::string("exception: ") + e.what();
    }
    it.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report_.pass = report_.pass && it.pass;
    report_.items.push_back(std::move(it));
  }

  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

private:
  Clock::time_point start_;
  SuiteReport report_;
};

Polynomial poly(const ContextPtr& ctx, std::string_view text) { return parse_polynomial(text, ctx); }

// ----------------------------------------------------------- bracket tables

struct Entry {
  std::vector<std::string> args;
  std::string value;
};

// Checks each listed entry through on_generators and through the bracket of
// the generator polynomials, and that no unlisted tuple is nonzero.
Outcome check_table(const Bracket& b, const std::vector<Entry>& entries) {
  const auto& ctx = b.context();
  std::size_t checked = 0;
  std::ostringstream bad;
  for (const auto& e : entries) {
    IndexTuple t;
    std::vector<Polynomial> args;
    for (const auto& name : e.args) {
      const auto idx = ctx->index_of(name);
      if (!idx) return {false, "unknown generator " + name};
      t.push_back(*idx);
      args.push_back(Polynomial::variable(ctx, *idx));
    }
    const Polynomial want = poly(ctx, e.value);
    const Polynomial via_table = b.on_generators(t);
    const Polynomial via_bracket = b(args);
    if (via_table != want || via_bracket != want) {
      bad << " [" << e.args.front() << ",...]=" << via_table.to_string() << " want " << e.value;
    }
    ++checked;
  }
  std::size_t listed_nonzero = 0;
  for (const auto& e : entries) listed_nonzero += poly(ctx, e.value).is_zero() ? 0 : 1;
  std::size_t actual_nonzero = 0;
  const auto tuples = increasing_tuples(ctx->size(), b.arity());
  for (const auto& t : tuples) actual_nonzero += b.on_generators(t).is_zero() ? 0 : 1;
  if (actual_nonzero != listed_nonzero) {
    bad << " nonzero entries " << actual_nonzero << " want " << listed_nonzero;
  }
  const std::string errors = bad.str();
  if (!errors.empty()) return {false, errors};
  return {true, std::to_string(checked) + " listed entries, " + std::to_string(tuples.size()) +
                    " tuples scanned"};
}

void table_items(Runner& run) {
  run.item("table.sl2", 1, "sl2 generator brackets", [] {
    return check_table(make_sl2().bracket, {{{"h", "e"}, "2e"}, {{"h", "f"}, "-2f"}, {{"e", "f"}, "h"}});
  });
  run.item("table.sl2-jacobian", 1, "sl2 brackets from C = 1/2 h^2 + 2ef", [] {
    return check_table(*make_sl2().jacobian_form,
                       {{{"h", "e"}, "2e"}, {{"h", "f"}, "-2f"}, {{"e", "f"}, "h"}});
  });
  run.item("table.nlie-2", 1, "simple 2-Lie algebra, alpha = (1,2,3)", [] {
    const std::vector<Rational> a{1, 2, 3};
    return check_table(make_nlie_diagonal(a).bracket, {{{"e2", "e3"}, "e1"},
                                                       {{"e1", "e3"}, "2 e2"},
                                                       {{"e1", "e2"}, "3 e3"}});
  });
  run.item("table.nlie-3", 1, "simple 3-Lie algebra, alpha = (1,2,3,4)", [] {
    const std::vector<Rational> a{1, 2, 3, 4};
    return check_table(make_nlie_diagonal(a).bracket, {{{"e2", "e3", "e4"}, "e1"},
                                                       {{"e1", "e3", "e4"}, "2 e2"},
                                                       {{"e1", "e2", "e4"}, "3 e3"},
                                                       {{"e1", "e2", "e3"}, "4 e4"}});
  });
  run.item("table.jacobian-signs-3", 1, "generator brackets of P_C, C = x1^2+...+x4^2", [] {
    return check_table(make_quadric(3).bracket, {{{"x2", "x3", "x4"}, "-2 x1"},
                                                 {{"x1", "x3", "x4"}, "2 x2"},
                                                 {{"x1", "x2", "x4"}, "-2 x3"},
                                                 {{"x1", "x2", "x3"}, "2 x4"}});
  });
  run.item("table.jacobian-signs-2", 1, "generator brackets of P_C, C = x^2 y + z", [] {
    const auto ctx = make_context({"x", "y", "z"});
    const auto spec = make_jacobian_algebra(poly(ctx, "x^2 y + z"), 2);
    return check_table(spec.bracket,
                       {{{"x", "y"}, "1"}, {{"y", "z"}, "2 x y"}, {{"z", "x"}, "x^2"}});
  });
  run.item("table.linear", 1, "linear C = z", [] {
    const auto ctx = make_context({"x", "y", "z"});
    const auto spec = make_jacobian_algebra(poly(ctx, "z"), 2);
    return check_table(spec.bracket, {{{"x", "y"}, "1"}, {{"y", "z"}, "0"}, {{"z", "x"}, "0"}});
  });
  run.item("table.elliptic", 1, "elliptic brackets, alpha = 2", [] {
    return check_table(make_elliptic(2).bracket, {{{"x", "y"}, "-2 x y + z^2"},
                                                  {{"y", "z"}, "-2 y z + x^2"},
                                                  {{"z", "x"}, "-2 z x + y^2"}});
  });
  run.item("table.malcev-splittable", 1, "splittable Malcev basis", [] {
    return check_table(make_malcev_splittable().bracket,
                       {{{"h", "x"}, "2x"},        {{"h", "y"}, "2y"},        {{"h", "z"}, "2z"},
                        {{"h", "x'"}, "-2x'"},     {{"h", "y'"}, "-2y'"},     {{"h", "z'"}, "-2z'"},
                        {{"x", "x'"}, "h"},        {{"y", "y'"}, "h"},        {{"z", "z'"}, "h"},
                        {{"x", "y"}, "2z'"},       {{"y", "z"}, "2x'"},       {{"z", "x"}, "2y'"},
                        {{"x'", "y'"}, "-2z"},     {{"y'", "z'"}, "-2x"},     {{"z'", "x'"}, "-2y"},
                        {{"x", "y'"}, "0"},        {{"x", "z'"}, "0"},        {{"y", "x'"}, "0"},
                        {{"y", "z'"}, "0"},        {{"z", "x'"}, "0"},        {{"z", "y'"}, "0"}});
  });
  run.item("table.malcev-canonical", 1, "canonical Malcev basis", [] {
    return check_table(make_malcev_canonical().bracket,
                       {{{"e1", "e2"}, "e4"}, {{"e2", "e4"}, "e1"}, {{"e4", "e1"}, "e2"},
                        {{"e2", "e3"}, "e5"}, {{"e3", "e5"}, "e2"}, {{"e5", "e2"}, "e3"},
                        {{"e3", "e4"}, "e6"}, {{"e4", "e6"}, "e3"}, {{"e6", "e3"}, "e4"},
                        {{"e4", "e5"}, "e7"}, {{"e5", "e7"}, "e4"}, {{"e7", "e4"}, "e5"},
                        {{"e5", "e6"}, "e1"}, {{"e6", "e1"}, "e5"}, {{"e1", "e5"}, "e6"},
                        {{"e6", "e7"}, "e2"}, {{"e7", "e2"}, "e6"}, {{"e2", "e6"}, "e7"},
                        {{"e7", "e1"}, "e3"}, {{"e1", "e3"}, "e7"}, {{"e3", "e7"}, "e1"}});
  });
  run.item("table.malcev-abg", 1, "M(2,3,5) sample products", [] {
    const auto spec = make_malcev_abg(2, 3, 5);
    const auto& ctx = spec.bracket.context();
    std::size_t ok = 0;
    const std::vector<Entry> sample{
        {{"f1", "f2"}, "f4"}, {{"f2", "f4"}, "3 f1"}, {{"f5", "f6"}, "15 f1"}};
    for (const auto& e : sample) {
      const std::vector<Polynomial> args{poly(ctx, e.args[0]), poly(ctx, e.args[1])};
      if (spec.bracket(args) == poly(ctx, e.value)) ++ok;
    }
    return Outcome{ok == sample.size(), std::to_string(ok) + "/3 sample products"};
  });
}

// -------------------------------------------------------------- identities

Outcome identity_outcome(const IdentityReport& r) {
  std::string detail = std::to_string(r.trials) + " trials";
  if (!r.failures.empty()) detail += ", first defect " + r.failures.front().defect;
  return {r.pass, detail};
}

void identity_items(Runner& run, std::uint64_t seed) {
  TrialConfig cfg;
  cfg.trials = 100;
  cfg.seed = seed;
  cfg.max_degree = 3;
  cfg.coeff_bound = 9;
  const std::vector<std::pair<std::string, AlgebraSpec>> algebras{
      {"sl2", make_sl2()}, {"elliptic(1)", make_elliptic(1)}, {"quadric(3)", make_quadric(3)}};
  for (const auto& [name, spec] : algebras) {
    const Bracket& b = spec.bracket;
    run.item("identity." + name + ".skew", 2, "skew-symmetry on " + name,
             [&] { return identity_outcome(verify_skew(b, cfg)); });
    run.item("identity." + name + ".leibniz", 2, "Leibniz identity on " + name,
             [&] { return identity_outcome(verify_leibniz(b, cfg)); });
    run.item("identity." + name + ".filippov", 2, "Filippov identity on " + name,
             [&] { return identity_outcome(verify_filippov(b, cfg)); });
    run.item("identity." + name + ".strong", 2, "strong identity on " + name,
             [&] { return identity_outcome(verify_strong(b, cfg)); });
  }
  const auto malcev = make_malcev_splittable();
  run.item("identity.malcev-splittable.skew", 2, "skew-symmetry on P(M)",
           [&] { return identity_outcome(verify_skew(malcev.bracket, cfg)); });
  run.item("identity.malcev-splittable.leibniz", 2, "Leibniz identity on P(M)",
           [&] { return identity_outcome(verify_leibniz(malcev.bracket, cfg)); });
}

// ------------------------------------------------------- Malcev constants

void malcev_constant_items(Runner& run) {
  run.item("malcev.jacobians", 3, "ternary Jacobians in the splittable basis", [] {
    const auto spec = make_malcev_splittable();
    const auto& ctx = spec.bracket.context();
    const auto g = [&](std::string_view n) { return poly(ctx, n); };
    struct Case {
      const char *a, *b, *c, *want;
    };
    const Case cases[] = {{"x", "y", "h", "12 z'"},   {"x'", "y", "h", "0"},  {"y'", "y", "h", "0"},
                          {"z'", "y", "h", "0"},      {"y", "x", "h", "-12 z'"},
                          {"z", "x", "h", "12 y'"},   {"x'", "x", "h", "0"}, {"y'", "x", "h", "0"},
                          {"z'", "x", "h", "0"},      {"y'", "x", "x'", "-6 y'"},
                          {"z'", "x", "x'", "-6 z'"}};
    std::size_t ok = 0;
    std::string bad;
    for (const auto& c : cases) {
      const Polynomial got = ternary_jacobian(spec.bracket, g(c.a), g(c.b), g(c.c));
      if (got == g(c.want)) {
        ++ok;
      } else {
        bad += std::string(" J(") + c.a + "," + c.b + "," + c.c + ")=" + got.to_string();
      }
    }
    return Outcome{bad.empty(), std::to_string(ok) + "/" + std::to_string(std::size(cases)) + bad};
  });
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(-3)}) {
    run.item("malcev.quotient-relation.lambda=" + to_string(lambda), 3,
             "yy' + zz' = -lambda - xx' - 1/4 h^2 in P(M)/(c - lambda)", [lambda] {
               const auto spec = make_malcev_splittable();
               const auto& ctx = spec.bracket.context();
               QuotientContext q(spec.bracket, *spec.casimir, lambda);
               const Polynomial lhs = q_reduce(q, poly(ctx, "y y' + z z'"));
               const Polynomial rhs =
                   q_reduce(q, Polynomial::constant(ctx, -lambda) - poly(ctx, "x x' + 1/4 h^2"));
               return Outcome{lhs == rhs, lhs.to_string()};
             });
  }
}

// ---------------------------------------------------------------- Casimirs

Outcome central(const AlgebraSpec& spec) {
  const auto r = center_membership(spec.bracket, *spec.casimir);
  if (r.member) return {true, spec.casimir->to_string()};
  return {false, "nonzero bracket " + r.witnesses.front().value.to_string()};
}

void casimir_items(Runner& run) {
  run.item("casimir.sl2", 4, "1/2 h^2 + 2ef is central in P(sl2)", [] { return central(make_sl2()); });
  run.item("casimir.sl2-jacobian", 4, "minor criterion for 1/2 h^2 + 2ef", [] {
    const auto spec = make_sl2();
    const auto r = center_membership_jacobian(*spec.jacobian_form, *spec.casimir);
    return Outcome{r.member, std::to_string(r.witnesses.size()) + " nonzero minors"};
  });
  for (int alpha : {0, 1, 2}) {
    run.item("casimir.elliptic(" + std::to_string(alpha) + ")", 4, "elliptic C is central",
             [alpha] { return central(make_elliptic(alpha)); });
  }
  for (std::size_t n : {2, 3, 4}) {
    run.item("casimir.quadric(" + std::to_string(n) + ")", 4, "sum of squares is central",
             [n] { return central(make_quadric(n)); });
  }
  run.item("casimir.nlie(1,-2,3,-4)", 4, "defining form of an n-Lie table is central", [] {
    const std::vector<Rational> a{1, -2, 3, -4};
    return central(make_nlie_diagonal(a));
  });
  run.item("casimir.malcev-canonical", 4, "e1^2 + ... + e7^2 is central",
           [] { return central(make_malcev_canonical()); });
  run.item("casimir.malcev-abg-grid", 4, "c_M(alpha,beta,gamma) central on {1,2,3}^3", [] {
    std::size_t ok = 0;
    std::string bad;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        for (int c = 1; c <= 3; ++c) {
          if (central(make_malcev_abg(a, b, c)).pass) {
            ++ok;
          } else {
            bad += " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
          }
        }
      }
    }
    return Outcome{ok == 27, std::to_string(ok) + "/27" + bad};
  });
  run.item("casimir.malcev-splittable", 4, "-(xx' + yy' + zz' + 1/4 h^2) is central",
           [] { return central(make_malcev_splittable()); });
  run.item("casimir.malcev-splittable-h", 4, "h is not central in P(M)", [] {
    const auto spec = make_malcev_splittable();
    const auto r = center_membership(spec.bracket, poly(spec.bracket.context(), "h"));
    return Outcome{!r.member, r.member ? "h reported central"
                                      : "witness " + r.witnesses.front().value.to_string()};
  });
}

void closedness_items(Runner& run) {
  const std::vector<std::pair<std::string, AlgebraSpec>> closed{
      {"sl2", make_sl2()},           {"elliptic(0)", make_elliptic(0)},
      {"elliptic(1)", make_elliptic(1)}, {"elliptic(2)", make_elliptic(2)},
      {"quadric(2)", make_quadric(2)}, {"quadric(3)", make_quadric(3)},
      {"quadric(4)", make_quadric(4)}};
  for (const auto& [name, spec] : closed) {
    run.item("closed." + name, 5, "built-in Casimir of " + name + " is closed", [&] {
      const auto r = is_closed_homogeneous(*spec.casimir);
      return Outcome{r.closed, r.closed ? "closed" : "root " + r.witness->root->to_string()};
    });
  }
}

// -------------------------------------------------------------------- roots

void root_items(Runner& run, std::uint64_t seed) {
  run.item("roots.planted", 5, "kth_root recovers 50 planted roots", [seed] {
    PolyRng rng(seed ^ 0x5eedULL);
    std::size_t ok = 0;
    std::string bad;
    for (int trial = 0; trial < 50; ++trial) {
      const auto nvars = static_cast<std::size_t>(rng.uniform(1, 4));
      const auto ctx = indexed_context("x", nvars);
      const auto degree = static_cast<unsigned>(rng.uniform(1, 3));
      const auto k = static_cast<unsigned>(rng.uniform(2, 4));
      const Polynomial c = rng.homogeneous(ctx, degree, 9, 4);
      const Rational alpha = rng.nonzero(9);
      const Polynomial big = c.pow(k) * alpha;
      const auto r = kth_root(big, k);
      if (r.root && *r.root == c.monic() && r.root->pow(k) * r.alpha == big) {
        ++ok;
      } else if (bad.empty()) {
        bad = " first miss: C = " + big.to_string() + ", k = " + std::to_string(k);
      }
    }
    return Outcome{ok == 50, std::to_string(ok) + "/50" + bad};
  });
  run.item("roots.minimal-closed", 5, "minimal roots of planted powers are closed", [seed] {
    PolyRng rng(seed ^ 0x6007ULL);
    std::size_t ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto ctx = indexed_context("x", static_cast<std::size_t>(rng.uniform(1, 4)));
      const Polynomial c = rng.homogeneous(ctx, static_cast<unsigned>(rng.uniform(1, 3)), 9, 4);
      const Polynomial big = c.pow(static_cast<unsigned>(rng.uniform(1, 4)));
      if (is_closed_homogeneous(minimal_root_homogeneous(big)).closed) ++ok;
    }
    return Outcome{ok == 50, std::to_string(ok) + "/50"};
  });
}

// ------------------------------------------------------------------ grading

Outcome grading_trials(const AlgebraSpec& spec, std::uint64_t seed) {
  QuotientContext q(spec.bracket, *spec.casimir, 1);
  const unsigned m = q.m();
  const std::size_t n = spec.bracket.arity();
  PolyRng rng(seed);
  std::size_t ok = 0, zero = 0;
  std::string bad;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<unsigned> residues;
    std::vector<Polynomial> args;
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<unsigned>(rng.uniform(0, m - 1));
      residues.push_back(r);
      args.push_back(rng.m_homogeneous(q.context(), m, r, 4, 9, 3));
    }
    const unsigned predicted = bracket_grade_check(q, residues);
    const auto classes = grade_decompose(q, q_bracket(q, args));
    if (classes.empty()) {
      ++zero;
      ++ok;
    } else if (classes.size() == 1 && classes.front().residue == predicted) {
      ++ok;
    } else if (bad.empty()) {
      bad = " first mismatch at trial " + std::to_string(trial);
    }
  }
  return {ok == 50, std::to_string(ok) + "/50 (" + std::to_string(zero) + " zero brackets)" + bad};
}

void grading_items(Runner& run, std::uint64_t seed) {
  run.item("grading.n2-m2", 6, "bracket residues on sl2 (n = 2, m = 2)",
           [seed] { return grading_trials(make_sl2(), seed + 1); });
  run.item("grading.n2-m3", 6, "bracket residues on elliptic(1) (n = 2, m = 3)",
           [seed] { return grading_trials(make_elliptic(1), seed + 2); });
  run.item("grading.n3-m2", 6, "bracket residues on quadric(3) (n = 3, m = 2)",
           [seed] { return grading_trials(make_quadric(3), seed + 3); });
  run.item("grading.lift", 6, "homogeneous lift keeps degree and quotient class", [seed] {
    const std::vector<AlgebraSpec> specs{make_sl2(), make_elliptic(1), make_quadric(3)};
    PolyRng rng(seed + 4);
    std::size_t ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
      QuotientContext q(spec.bracket, *spec.casimir, rng.nonzero(3));
      const auto residue = static_cast<unsigned>(rng.uniform(0, q.m() - 1));
      Polynomial f = rng.m_homogeneous(q.context(), q.m(), residue, 5, 9, 4);
      while (q_reduce(q, f).is_zero()) f = rng.m_homogeneous(q.context(), q.m(), residue, 5, 9, 4);
      const Polynomial lifted = m_homogeneous_lift(q, f);
      if (lifted.is_homogeneous() && lifted.degree() == f.degree() &&
          q_reduce(q, lifted) == q_reduce(q, f)) {
        ++ok;
      }
    }
    return Outcome{ok == 50, std::to_string(ok) + "/50"};
  });
}

// --------------------------------------------------------------- saturation

Outcome saturation_outcome(const SaturationReport& r, Verdict want) {
  std::string detail = to_string(r.verdict) + " after " + std::to_string(r.rounds) + " rounds, " +
                       std::to_string(r.steps) + " steps";
  return {r.verdict == want, detail};
}

Polynomial random_quadratic_seed(const QuotientContext& q, PolyRng& rng) {
  while (true) {
    Polynomial s = rng.poly(q.context(), 2, 9, 4);
    if (s.degree() == 2 && !q_reduce(q, s).is_zero()) return s;
  }
}

void saturation_items(Runner& run, std::uint64_t seed) {
  const auto xyz = make_context({"x", "y", "z"});
  struct Case {
    std::string name;
    AlgebraSpec spec;
    std::vector<Rational> lambdas;
  };
  const std::vector<Case> cases{
      {"sphere", make_jacobian_algebra(poly(xyz, "x^2 + y^2 + z^2"), 2, "sphere"), {1, -1}},
      {"sl2", make_sl2(), {1, -1}},
      {"elliptic(1)", make_elliptic(1), {1, -1}},
      {"quadric(3)", make_quadric(3), {1}}};
  PolyRng rng(seed + 7);
  for (const auto& c : cases) {
    for (const auto& lambda : c.lambdas) {
      QuotientContext q(c.spec.bracket, *c.spec.casimir, lambda);
      const auto& ctx = q.context();
      const std::string tag = c.name + ".lambda=" + to_string(lambda);
      for (std::size_t i = 0; i < ctx->size(); ++i) {
        run.item("saturate." + tag + ".seed=" + ctx->name(i), 7,
                 "Poisson ideal of " + ctx->name(i) + " is everything", [q, i] {
                   const Polynomial s = Polynomial::variable(q.context(), i);
                   return saturation_outcome(saturate_poisson_ideal(q, std::span(&s, 1)),
                                             Verdict::WholeRing);
                 });
      }
      const Polynomial s = random_quadratic_seed(q, rng);
      run.item("saturate." + tag + ".seed=random", 7, "random quadratic seed " + s.to_string(),
               [q, s] {
                 return saturation_outcome(saturate_poisson_ideal(q, std::span(&s, 1)),
                                           Verdict::WholeRing);
               });
    }
  }
  const auto malcev = make_malcev_splittable();
  QuotientContext mq(malcev.bracket, *malcev.casimir, 1);
  for (const char* name : {"h", "x"}) {
    run.item(std::string("saturate.malcev-splittable.seed=") + name, 7,
             std::string("Poisson ideal of ") + name + " in P(M)/(c - 1)", [&mq, name] {
               const Polynomial s = poly(mq.context(), name);
               return saturation_outcome(saturate_poisson_ideal(mq, std::span(&s, 1)),
                                         Verdict::WholeRing);
             });
  }
  run.item("saturate.negative-control", 7, "C = (x+y+z)^2, seed x+y+z-1 stays proper", [xyz] {
    const auto spec = make_jacobian_algebra(poly(xyz, "(x+y+z)^2"), 2, "square");
    QuotientContext q(spec.bracket, *spec.casimir, 1);
    const Polynomial s = poly(xyz, "x + y + z - 1");
    return saturation_outcome(saturate_poisson_ideal(q, std::span(&s, 1)), Verdict::ProperStable);
  });
}

// ------------------------------------------------------------ center probes

std::string join(const std::vector<Polynomial>& basis) {
  std::string out = "{";
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ", " : "") + basis[i].to_string();
  return out + "}";
}

void center_probe_items(Runner& run) {
  const std::vector<std::pair<std::string, AlgebraSpec>> quotients{
      {"sl2", make_sl2()}, {"quadric(2)", make_quadric(2)}, {"quadric(3)", make_quadric(3)}};
  for (const auto& [name, spec] : quotients) {
    run.item("center.quotient." + name, 8, "degree <= 3 center of " + name + "/(C - 1)", [&] {
      QuotientContext q(spec.bracket, *spec.casimir, 1);
      const auto basis = center_probe_quotient(q, 3);
      const bool ok = basis.size() == 1 && basis.front() == Polynomial::constant(q.context(), 1);
      return Outcome{ok, join(basis)};
    });
  }
  const std::vector<std::pair<std::string, AlgebraSpec>> ambient{
      {"sl2", make_sl2()},           {"elliptic(1)", make_elliptic(1)},
      {"quadric(2)", make_quadric(2)}, {"quadric(3)", make_quadric(3)},
      {"malcev-splittable", make_malcev_splittable()}};
  for (const auto& [name, spec] : ambient) {
    run.item("center.ambient." + name, 8, "degree <= deg C center of P for " + name, [&] {
      const auto& c = *spec.casimir;
      const auto basis = center_probe_ambient(spec.bracket, static_cast<unsigned>(c.degree()));
      const bool ok = basis.size() == 2 && basis[0] == c.monic() &&
                      basis[1] == Polynomial::constant(c.context(), 1);
      return Outcome{ok, join(basis)};
    });
  }
}

} // namespace

SuiteReport run_regression_suite(std::uint64_t seed) {
  Runner run("paper-suite", seed);
  table_items(run);
  identity_items(run, seed);
  malcev_constant_items(run);
  casimir_items(run);
  closedness_items(run);
  root_items(run, seed);
  grading_items(run, seed);
  saturation_items(run, seed);
  center_probe_items(run);
  return run.finish();
}

SuiteReport run_casimir_suite() {
  Runner run("casimir-suite", 0);
  casimir_items(run);
  closedness_items(run);
  return run.finish();
}

} // namespace nambu
