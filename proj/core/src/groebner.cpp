#include "nambu/groebner.hpp"

#include "nambu/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace nambu {

void StepBudget::charge(std::uint64_t steps) {
  used_ += steps;
  if (used_ > limit_) {
    throw BudgetExhausted("step budget of " + std::to_string(limit_) + " reduction steps exhausted");
  }
}

namespace {

// Term lists inside this file are stored in ASCENDING order under the active
// monomial order, so the leading term is back() and can be popped in O(1).
template <class C>
struct OTerm {
  Monomial m;
  C c;
};
template <class C>
using OPoly = std::vector<OTerm<C>>;
using QPoly = OPoly<Rational>;
using ZPoly = OPoly<Integer>;

QPoly to_q(const Polynomial& p, const MonomialOrder& ord) {
  QPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.monomial, t.coeff});
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.compare(a.m, b.m) < 0; });
  return out;
}

template <class C>
Polynomial to_poly(const ContextPtr& ctx, const OPoly<C>& p) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.m, Rational(t.c)});
  return Polynomial::from_terms(ctx, std::move(terms));
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

ZPoly to_z(const Polynomial& p, const MonomialOrder& ord) {
  Integer den = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  ZPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.monomial, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return ord.compare(a.m, b.m) < 0; });
  make_primitive(out);
  return out;
}

QPoly z_to_monic_q(const ZPoly& p) {
  QPoly out;
  out.reserve(p.size());
  const Integer& lc = p.back().c;
  for (const auto& t : p) {
    Rational q(t.c, lc);
    q.canonicalize();
    out.push_back({t.m, std::move(q)});
  }
  return out;
}

// a*p - b*(u*g), both ascending. Zero sums are dropped.
template <class C>
OPoly<C> combine(const OPoly<C>& p, const C& a, const OPoly<C>& g, const Monomial& u, const C& b,
                 const MonomialOrder& ord) {
  OPoly<C> out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  C tmp;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back({p[i].m, p[i].c * a});
      ++i;
      continue;
    }
    const Monomial gm = g[j].m * u;
    const int cmp = i == p.size() ? 1 : ord.compare(p[i].m, gm);
    if (cmp < 0) {
      out.push_back({p[i].m, p[i].c * a});
      ++i;
    } else if (cmp > 0) {
      out.push_back({gm, -(g[j].c * b)});
      ++j;
    } else {
      tmp = p[i].c * a - g[j].c * b;
      if (tmp != 0) out.push_back({gm, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<std::size_t> find_reducer(const Monomial& m, const std::vector<const ZPoly*>& G) {
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G[k]->back().m.divides(m)) return k;
  }
  return std::nullopt;
}

// Full reduction of p by G over the integers; the result is primitive and
// equals a nonzero rational multiple of the rational normal form.
ZPoly reduce_z(ZPoly p, const std::vector<const ZPoly*>& G, const MonomialOrder& ord,
               StepBudget& budget) {
  ZPoly rem; // descending as built
  unsigned since_content = 0;
  while (!p.empty()) {
    const auto& lead = p.back();
    const auto k = find_reducer(lead.m, G);
    if (!k) {
      rem.push_back(std::move(p.back()));
      p.pop_back();
      continue;
    }
    budget.charge();
    const ZPoly& g = *G[*k];
    const Integer& lg = g.back().c;
    Integer c = gcd(lead.c, lg);
    Integer a = lg / c;
    Integer b = lead.c / c;
    const Monomial u = lead.m / g.back().m;
    p = combine(p, a, g, u, b, ord);
    if (a != 1) {
      for (auto& t : rem) t.c *= a;
    }
    if (++since_content >= 8) {
      since_content = 0;
      // Remove the joint content of p and rem to keep coefficients small.
      Integer gg = 0;
      for (const auto& t : p) mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), t.c.get_mpz_t());
      for (const auto& t : rem) mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), t.c.get_mpz_t());
      if (gg > 1) {
        for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), gg.get_mpz_t());
        for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), gg.get_mpz_t());
      }
    }
  }
  std::reverse(rem.begin(), rem.end());
  make_primitive(rem);
  return rem;
}

ZPoly s_poly_z(const ZPoly& f, const ZPoly& g, const MonomialOrder& ord) {
  const Monomial l = f.back().m.lcm(g.back().m);
  const Integer c = gcd(f.back().c, g.back().c);
  const Integer a = g.back().c / c;
  const Integer b = f.back().c / c;
  ZPoly uf;
  uf.reserve(f.size());
  const Monomial u = l / f.back().m;
  for (const auto& t : f) uf.push_back({t.m * u, t.c});
  ZPoly s = combine(uf, a, g, l / g.back().m, b, ord);
  make_primitive(s);
  return s;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
public:
  Buchberger(const MonomialOrder& ord, StepBudget& budget) : ord_(ord), budget_(budget) {}

  // Returns false once a nonzero constant has entered the ideal.
  bool add_generator(ZPoly p) {
    p = reduce_z(std::move(p), active_polys(), ord_, budget_);
    if (p.empty()) return true;
    if (p.back().m.is_one()) return false;
    update(std::move(p));
    return true;
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        const int c = ord_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
      }
      const Pair pr = *best;
      pairs_.erase(best);
      budget_.charge();
      ZPoly h = s_poly_z(elems_[pr.i], elems_[pr.j], ord_);
      if (!add_generator(std::move(h))) return false;
    }
    return true;
  }

  std::vector<Polynomial> reduced_basis(const ContextPtr& ctx) {
    std::vector<QPoly> out;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      std::vector<const ZPoly*> others;
      for (std::size_t l = 0; l < active_.size(); ++l) {
        if (l != k) others.push_back(&elems_[active_[l]]);
      }
      ZPoly g = reduce_z(elems_[active_[k]], others, ord_, budget_);
      out.push_back(z_to_monic_q(g));
    }
    std::sort(out.begin(), out.end(), [&](const QPoly& a, const QPoly& b) {
      return ord_.compare(a.back().m, b.back().m) > 0;
    });
    std::vector<Polynomial> polys;
    polys.reserve(out.size());
    for (const auto& q : out) polys.push_back(to_poly(ctx, q));
    return polys;
  }

private:
  std::vector<const ZPoly*> active_polys() const {
    std::vector<const ZPoly*> out;
    out.reserve(active_.size());
    for (auto idx : active_) out.push_back(&elems_[idx]);
    return out;
  }

  const Monomial& lm(std::size_t idx) const { return elems_[idx].back().m; }

  // Gebauer-Moeller installation of a new basis element.
  void update(ZPoly h) {
    const std::size_t hi = elems_.size();
    elems_.push_back(std::move(h));
    const Monomial& lh = lm(hi);

    std::vector<Pair> candidates;
    for (auto g : active_) candidates.push_back({g, hi, lh.lcm(lm(g))});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p1 = candidates[a];
      bool keep = lh.coprime(lm(p1.i));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p1.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p1.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p1);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && lm(p.i).lcm(lh) != p.lcm && lm(p.j).lcm(lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& p : kept) {
      if (!lh.coprime(lm(p.i))) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> act;
    for (auto g : active_) {
      if (!lh.divides(lm(g))) act.push_back(g);
    }
    act.push_back(hi);
    active_ = std::move(act);
  }

  const MonomialOrder& ord_;
  StepBudget& budget_;
  std::vector<ZPoly> elems_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

} // namespace

const Polynomial::Term& leading_term(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  if (ord.kind() == OrderKind::GradedReverseLex && ord.priority().empty()) return p.leading_term();
  const auto terms = p.terms();
  auto best = terms.begin();
  for (auto it = terms.begin() + 1; it != terms.end(); ++it) {
    if (ord.compare(it->monomial, best->monomial) > 0) best = it;
  }
  return *best;
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& ord) {
  const auto& ctx = f.context();
  std::vector<QPoly> ds;
  for (const auto& d : divisors) {
    require_same_context(ctx, d.context());
    if (d.is_zero()) throw DomainError("divide: zero divisor");
    ds.push_back(to_q(d, ord));
  }
  std::vector<std::vector<Polynomial::Term>> quot(ds.size());
  QPoly p = to_q(f, ord);
  std::vector<Polynomial::Term> rem;
  const Rational one(1);
  while (!p.empty()) {
    const auto lead = p.back();
    bool reduced = false;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const auto& dl = ds[k].back();
      if (!dl.m.divides(lead.m)) continue;
      const Monomial u = lead.m / dl.m;
      Rational c = lead.c / dl.c;
      quot[k].push_back({u, c});
      p = combine(p, one, ds[k], u, c, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back({lead.m, lead.c});
      p.pop_back();
    }
  }
  DivisionResult out{{}, Polynomial::from_terms(ctx, std::move(rem))};
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(ctx, std::move(q)));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  require_same_context(f.context(), g.context());
  const auto& lf = leading_term(f, ord);
  const auto& lg = leading_term(g, ord);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times_term(l / lf.monomial, 1 / lf.coeff) - g.times_term(l / lg.monomial, 1 / lg.coeff);
}

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, bool reduced)
    : generators_(std::move(generators)), order_(std::move(order)), reduced_(reduced) {
  if (generators_.empty()) throw DomainError("a Groebner basis needs at least one generator");
  for (const auto& g : generators_) {
    require_same_context(generators_.front().context(), g.context());
    if (g.is_zero()) throw DomainError("Groebner basis generators must be nonzero");
  }
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord,
                         StepBudget& budget) {
  const Polynomial* first = nullptr;
  for (const auto& g : gens) {
    if (first) require_same_context(first->context(), g.context());
    if (!g.is_zero() && !first) first = &g;
  }
  if (!first) throw DomainError("buchberger: all generators are zero");
  const ContextPtr ctx = first->context();
  for (const auto& g : gens) require_same_context(ctx, g.context());

  auto unit = [&] {
    return GroebnerBasis({Polynomial::constant(ctx, 1)}, ord, true);
  };

  Buchberger bb(ord, budget);
  // Lower-degree generators first keeps the first reductions cheap.
  std::vector<const Polynomial*> order;
  for (const auto& g : gens) {
    if (!g.is_zero()) order.push_back(&g);
  }
  std::stable_sort(order.begin(), order.end(), [&](const Polynomial* a, const Polynomial* b) {
    return ord.compare(leading_term(*a, ord).monomial, leading_term(*b, ord).monomial) < 0;
  });
  for (const auto* g : order) {
    if (!bb.add_generator(to_z(*g, ord))) return unit();
  }
  if (!bb.run()) return unit();
  return GroebnerBasis(bb.reduced_basis(ctx), ord, true);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord,
                         std::uint64_t budget) {
  StepBudget b(budget);
  return buchberger(gens, ord, b);
}

bool contains_one(const GroebnerBasis& gb) {
  for (const auto& g : gb.generators()) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, StepBudget* budget) {
  require_same_context(f.context(), gb.context());
  const auto& ord = gb.order();
  std::vector<QPoly> gs;
  gs.reserve(gb.size());
  for (const auto& g : gb.generators()) gs.push_back(to_q(g, ord));

  QPoly p = to_q(f, ord);
  std::vector<Polynomial::Term> rem;
  const Rational one(1);
  while (!p.empty()) {
    const auto& lead = p.back();
    const QPoly* red = nullptr;
    for (const auto& g : gs) {
      if (g.back().m.divides(lead.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      rem.push_back({lead.m, lead.c});
      p.pop_back();
      continue;
    }
    if (budget) budget->charge();
    const Monomial u = lead.m / red->back().m;
    const Rational c = lead.c / red->back().c;
    p = combine(p, one, *red, u, c, ord);
  }
  return Polynomial::from_terms(f.context(), std::move(rem));
}

bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto s = s_polynomial(gens[i], gens[j], ord);
      if (!divide(s, gens, ord).remainder.is_zero()) return false;
    }
  }
  return true;
}

} // namespace nambu
