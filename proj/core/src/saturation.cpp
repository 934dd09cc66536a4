#include "nambu/analysis.hpp"

#include "nambu/error.hpp"

namespace nambu {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::WholeRing:
    return "whole-ring";
  case Verdict::ProperStable:
    return "proper-stable";
  case Verdict::BudgetExhausted:
    return "budget-exhausted";
  }
  return "unknown";
}

SaturationReport saturate_poisson_ideal(const QuotientContext& q, std::span<const Polynomial> seeds,
                                        const SaturationOptions& options) {
  const auto& ctx = q.context();
  const auto& bracket = q.bracket();
  bool nonzero = false;
  for (const auto& s : seeds) {
    require_same_context(ctx, s.context());
    if (!q_reduce(q, s).is_zero()) nonzero = true;
  }
  if (!nonzero) throw DomainError("saturation needs a seed that is nonzero in the quotient");

  SaturationReport report;
  report.seeds.assign(seeds.begin(), seeds.end());
  StepBudget budget(options.step_budget);
  const auto tuples = increasing_tuples(ctx->size(), bracket.arity() - 1);

  std::vector<Polynomial> gens(seeds.begin(), seeds.end());
  gens.push_back(q.casimir() - Polynomial::constant(ctx, q.lambda()));
  try {
    while (report.rounds < options.max_rounds) {
      ++report.rounds;
      GroebnerBasis gb = buchberger(gens, options.order, budget);
      report.basis_sizes.push_back(gb.size());
      if (contains_one(gb)) {
        report.final_basis = std::move(gb);
        report.verdict = Verdict::WholeRing;
        break;
      }
      std::vector<Polynomial> fresh;
      for (const auto& g : gb.generators()) {
        for (const auto& t : tuples) {
          std::vector<Polynomial> args{g};
          for (auto i : t) args.push_back(Polynomial::variable(ctx, i));
          Polynomial r = normal_form(bracket(args), gb, &budget);
          if (!r.is_zero()) fresh.push_back(std::move(r));
        }
      }
      if (fresh.empty()) {
        report.final_basis = std::move(gb);
        report.verdict = Verdict::ProperStable;
        break;
      }
      gens.assign(gb.generators().begin(), gb.generators().end());
      gens.insert(gens.end(), fresh.begin(), fresh.end());
    }
  } catch (const BudgetExhausted&) {
    report.verdict = Verdict::BudgetExhausted;
  }
  report.steps = budget.used();
  return report;
}

} // namespace nambu
