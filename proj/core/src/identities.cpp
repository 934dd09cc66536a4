#include "nambu/identities.hpp"

#include "nambu/error.hpp"
#include "nambu/random_poly.hpp"

namespace nambu {

namespace {

class ReportBuilder {
public:
  ReportBuilder(std::string name, std::size_t arity, const TrialConfig& cfg) : cfg_(cfg) {
    report_.identity = std::move(name);
    report_.arity = arity;
  }

  void record(std::span<const Polynomial> inputs, const Polynomial& defect) {
    ++report_.trials;
    if (defect.is_zero()) return;
    report_.pass = false;
    if (report_.failures.size() >= cfg_.max_recorded) return;
    IdentityFailure f;
    for (const auto& p : inputs) f.inputs.push_back(p.to_string());
    f.defect = defect.to_string();
    report_.failures.push_back(std::move(f));
  }

  IdentityReport take() { return std::move(report_); }

private:
  TrialConfig cfg_;
  IdentityReport report_;
};

std::vector<Polynomial> random_args(PolyRng& rng, const ContextPtr& ctx, std::size_t count,
                                    const TrialConfig& cfg) {
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(rng.poly(ctx, cfg.max_degree, cfg.coeff_bound, cfg.max_terms));
  }
  return out;
}

std::vector<Polynomial> generators(const ContextPtr& ctx) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ctx->size(); ++i) g.push_back(Polynomial::variable(ctx, i));
  return g;
}

// Calls fn on every tuple in {0..n-1}^len.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t len, Fn&& fn) {
  std::vector<std::size_t> t(len, 0);
  while (true) {
    fn(t);
    std::size_t i = len;
    while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
    if (i == 0) return;
  }
}

} // namespace

Polynomial filippov_defect(const Bracket& b, std::span<const Polynomial> u,
                           std::span<const Polynomial> v) {
  const std::size_t n = b.arity();
  if (u.size() != n || v.size() + 1 != n) throw ArityMismatch("filippov_defect: wrong input counts");
  std::vector<Polynomial> outer;
  outer.push_back(b(u));
  outer.insert(outer.end(), v.begin(), v.end());
  Polynomial defect = b(outer);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> inner;
    inner.push_back(u[i]);
    inner.insert(inner.end(), v.begin(), v.end());
    std::vector<Polynomial> args(u.begin(), u.end());
    args[i] = b(inner);
    defect -= b(args);
  }
  return defect;
}

Polynomial strong_defect(const Bracket& b, std::span<const Polynomial> u,
                         std::span<const Polynomial> v) {
  const std::size_t n = b.arity();
  if (u.size() + 1 != n || v.size() != n + 1) throw ArityMismatch("strong_defect: wrong input counts");
  Polynomial sum(b.context());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Polynomial> left(u.begin(), u.end());
    left.push_back(v[i]);
    std::vector<Polynomial> right;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) right.push_back(v[j]);
    }
    Polynomial term = b(left) * b(right);
    // 1-based index i+1: sign (-1)^{i+1}.
    if (i % 2 == 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

IdentityReport verify_skew(const Bracket& b, const TrialConfig& cfg) {
  PolyRng rng(cfg.seed);
  ReportBuilder rep("skew", b.arity(), cfg);
  const std::size_t n = b.arity();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto args = random_args(rng, b.context(), n, cfg);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i) + 1,
                                                        static_cast<std::int64_t>(n) - 1));
    auto repeated = args;
    repeated[j] = repeated[i];
    Polynomial defect = b(repeated);
    if (defect.is_zero()) {
      auto swapped = args;
      std::swap(swapped[i], swapped[j]);
      defect = b(args) + b(swapped);
    }
    rep.record(args, defect);
  }
  return rep.take();
}

IdentityReport verify_leibniz(const Bracket& b, const TrialConfig& cfg) {
  PolyRng rng(cfg.seed);
  ReportBuilder rep("leibniz", b.arity(), cfg);
  const std::size_t n = b.arity();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto args = random_args(rng, b.context(), n, cfg);
    const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const Polynomial x = rng.poly(b.context(), cfg.max_degree, cfg.coeff_bound, cfg.max_terms);
    const Polynomial y = args[slot];
    auto with = [&](const Polynomial& p) {
      auto a = args;
      a[slot] = p;
      return b(a);
    };
    const Polynomial defect = with(x * y) - x * with(y) - with(x) * y;
    std::vector<Polynomial> inputs = args;
    inputs.push_back(x);
    rep.record(inputs, defect);
  }
  return rep.take();
}

IdentityReport verify_filippov(const Bracket& b, const TrialConfig& cfg) {
  PolyRng rng(cfg.seed);
  ReportBuilder rep("filippov", b.arity(), cfg);
  const std::size_t n = b.arity();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto u = random_args(rng, b.context(), n, cfg);
    auto v = random_args(rng, b.context(), n - 1, cfg);
    const Polynomial defect = filippov_defect(b, u, v);
    u.insert(u.end(), v.begin(), v.end());
    rep.record(u, defect);
  }
  return rep.take();
}

IdentityReport verify_filippov_generators(const Bracket& b) {
  TrialConfig cfg;
  ReportBuilder rep("filippov-generators", b.arity(), cfg);
  const std::size_t n = b.arity();
  const auto gens = generators(b.context());
  for_each_tuple(gens.size(), 2 * n - 1, [&](const std::vector<std::size_t>& t) {
    std::vector<Polynomial> u, v;
    for (std::size_t i = 0; i < n; ++i) u.push_back(gens[t[i]]);
    for (std::size_t i = n; i < 2 * n - 1; ++i) v.push_back(gens[t[i]]);
    const Polynomial defect = filippov_defect(b, u, v);
    u.insert(u.end(), v.begin(), v.end());
    rep.record(u, defect);
  });
  return rep.take();
}

IdentityReport verify_strong(const Bracket& b, const TrialConfig& cfg) {
  PolyRng rng(cfg.seed);
  ReportBuilder rep("strong", b.arity(), cfg);
  const std::size_t n = b.arity();
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto u = random_args(rng, b.context(), n - 1, cfg);
    auto v = random_args(rng, b.context(), n + 1, cfg);
    const Polynomial defect = strong_defect(b, u, v);
    u.insert(u.end(), v.begin(), v.end());
    rep.record(u, defect);
  }
  const auto gens = generators(b.context());
  for_each_tuple(gens.size(), 2 * n, [&](const std::vector<std::size_t>& t) {
    std::vector<Polynomial> u, v;
    for (std::size_t i = 0; i < n - 1; ++i) u.push_back(gens[t[i]]);
    for (std::size_t i = n - 1; i < 2 * n; ++i) v.push_back(gens[t[i]]);
    const Polynomial defect = strong_defect(b, u, v);
    u.insert(u.end(), v.begin(), v.end());
    rep.record(u, defect);
  });
  return rep.take();
}

} // namespace nambu
