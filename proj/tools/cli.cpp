#include "cli.hpp"

#include "CLI11.hpp"
#include "nambu/analysis.hpp"
#include "nambu/expr.hpp"
#include "nambu/identities.hpp"
#include "nambu/quotient.hpp"
#include "nambu/report.hpp"
#include "nambu/structures.hpp"
#include "nambu/suite.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace nambu::cli {

namespace {

using nlohmann::json;

struct AlgebraOptions {
  std::string algebra;
  std::string alpha;
  std::string casimir;
  std::size_t arity = 0;
  std::string vars;
};

void add_algebra_options(CLI::App* cmd, AlgebraOptions& o) {
  cmd->add_option("--algebra", o.algebra,
                  "Built-in algebra: sl2, elliptic(a), quadric(n), nlie(a1,..), "
                  "malcev-canonical, malcev-abg(a,b,c), malcev-splittable");
  cmd->add_option("--alpha", o.alpha, "Parameter for --algebra elliptic");
  cmd->add_option("--casimir", o.casimir, "Custom C for the Jacobian bracket J(., ..., ., C)");
  cmd->add_option("--arity", o.arity, "Bracket arity for --casimir (default: variables - 1)");
  cmd->add_option("--vars", o.vars, "Comma-separated variable order for --casimir");
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

AlgebraSpec resolve_algebra(const AlgebraOptions& o) {
  if (!o.casimir.empty()) {
    if (!o.algebra.empty()) throw DomainError("--algebra and --casimir are mutually exclusive");
    const auto ast = parse_expression(o.casimir);
    const ContextPtr ctx = o.vars.empty() ? infer_context(*ast) : make_context(split_names(o.vars));
    const Polynomial c = lower(*ast, ctx);
    const std::size_t arity = o.arity ? o.arity : ctx->size() - 1;
    return make_jacobian_algebra(c, arity);
  }
  if (o.algebra.empty()) throw DomainError("one of --algebra or --casimir is required");
  if (!o.alpha.empty()) {
    if (o.algebra != "elliptic") throw DomainError("--alpha applies to --algebra elliptic only");
    return make_elliptic(parse_rational(o.alpha));
  }
  if (o.algebra == "elliptic") throw DomainError("elliptic needs --alpha or elliptic(alpha)");
  return make_algebra(o.algebra);
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& exprs, const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  for (const auto& e : exprs) out.push_back(parse_polynomial(e, ctx));
  return out;
}

// Aligned "key  value" lines.
class TextReport {
public:
  void line(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  void raw(const std::string& text) { rows_.emplace_back(std::string(), text); }

  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) {
      if (k.empty()) {
        os << v << "\n";
      } else {
        os << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
      }
    }
    return os.str();
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct Outcome {
  int code = kPass;
  json result;
  std::string text;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ------------------------------------------------------------------ commands

Outcome algebra_list() {
  Outcome o;
  o.result = {{"kind", "algebra-list"}, {"names", builtin_algebra_names()}};
  for (const auto& n : builtin_algebra_names()) o.text += n + "\n";
  return o;
}

Outcome algebra_show(const AlgebraOptions& opts) {
  const auto spec = resolve_algebra(opts);
  Outcome o;
  o.result = to_json(spec);
  o.result["kind"] = "algebra";
  o.text = describe(spec);
  return o;
}

Outcome bracket_cmd(const AlgebraOptions& opts, const std::vector<std::string>& exprs) {
  const auto spec = resolve_algebra(opts);
  const auto args = parse_all(exprs, spec.bracket.context());
  const Polynomial value = spec.bracket(args);
  Outcome o;
  o.result = {{"kind", "polynomial"}, {"value", value.to_string()}};
  o.text = value.to_string() + "\n";
  return o;
}

Outcome verify_cmd(const AlgebraOptions& opts, const std::string& identity, std::size_t trials,
                   std::uint64_t seed) {
  const auto spec = resolve_algebra(opts);
  TrialConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  std::vector<IdentityReport> reports;
  const auto& b = spec.bracket;
  const bool all = identity == "all";
  if (all || identity == "skew") reports.push_back(verify_skew(b, cfg));
  if (all || identity == "leibniz") reports.push_back(verify_leibniz(b, cfg));
  if (all || identity == "filippov") reports.push_back(verify_filippov(b, cfg));
  if (identity == "filippov-generators") reports.push_back(verify_filippov_generators(b));
  if (all || identity == "strong") reports.push_back(verify_strong(b, cfg));
  if (reports.empty()) throw DomainError("unknown identity '" + identity + "'");

  Outcome o;
  bool pass = true;
  json list = json::array();
  TextReport text;
  text.line("algebra", spec.name);
  for (const auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r));
    std::string summary = (r.pass ? "pass" : "FAIL") + std::string(" (") + std::to_string(r.trials) + " trials)";
    if (!r.failures.empty()) summary += "  defect " + r.failures.front().defect;
    text.line(r.identity, summary);
  }
  o.result = {{"kind", "identities"}, {"algebra", spec.name}, {"pass", pass}, {"reports", list}};
  o.text = text.str();
  o.code = pass ? kPass : kFail;
  return o;
}

Outcome quotient_cmd(const AlgebraOptions& opts, const std::string& action, const std::string& lambda,
                     const std::vector<std::string>& exprs) {
  const auto spec = resolve_algebra(opts);
  if (!spec.casimir) throw DomainError("algebra has no Casimir element");
  QuotientContext q(spec.bracket, *spec.casimir, parse_rational(lambda));
  const auto args = parse_all(exprs, q.context());
  Outcome o;
  auto single = [&]() -> const Polynomial& {
    if (args.size() != 1) throw DomainError("quotient " + action + " takes one expression");
    return args.front();
  };
  if (action == "reduce" || action == "bracket" || action == "lift") {
    Polynomial value(q.context());
    if (action == "reduce") value = q_reduce(q, single());
    if (action == "bracket") value = q_bracket(q, args);
    if (action == "lift") value = m_homogeneous_lift(q, single());
    o.result = {{"kind", "polynomial"}, {"value", value.to_string()}};
    o.text = value.to_string() + "\n";
    return o;
  }
  if (action == "grade") {
    const auto classes = grade_decompose(q, single());
    o.result = {{"kind", "graded"}, {"m", q.m()}, {"classes", to_json(classes)}};
    TextReport text;
    text.line("m", std::to_string(q.m()));
    for (const auto& c : classes) text.line("r = " + std::to_string(c.residue), c.representative.to_string());
    o.text = text.str();
    return o;
  }
  throw DomainError("unknown quotient action '" + action + "'");
}

Polynomial single_poly(const std::string& expr, const std::string& vars) {
  return parse_polynomial(expr, vars.empty() ? nullptr : make_context(split_names(vars)));
}

Outcome root_cmd(const std::string& expr, const std::string& vars, unsigned k) {
  const auto r = kth_root(single_poly(expr, vars), k);
  Outcome o;
  o.result = to_json(r);
  o.result["kind"] = "root";
  TextReport text;
  text.line("k", std::to_string(k));
  if (r.root) {
    text.line("root", r.root->to_string());
    text.line("alpha", to_string(r.alpha));
  } else {
    text.line("root", "none");
  }
  o.text = text.str();
  return o;
}

Outcome closed_cmd(const std::string& expr, const std::string& vars) {
  const auto r = is_closed_homogeneous(single_poly(expr, vars));
  Outcome o;
  o.result = to_json(r);
  o.result["kind"] = "closed";
  TextReport text;
  text.line("closed", yes_no(r.closed));
  if (r.witness) {
    text.line("witness k", std::to_string(r.witness->k));
    text.line("witness root", r.witness->root->to_string());
    text.line("alpha", to_string(r.witness->alpha));
  }
  o.text = text.str();
  return o;
}

Outcome minroot_cmd(const std::string& expr, const std::string& vars) {
  const Polynomial r = minimal_root_homogeneous(single_poly(expr, vars));
  Outcome o;
  o.result = {{"kind", "polynomial"}, {"value", r.to_string()}};
  o.text = r.to_string() + "\n";
  return o;
}

Outcome center_cmd(const AlgebraOptions& opts, const std::optional<std::string>& element,
                   std::optional<unsigned> degree, bool quotient, const std::string& lambda) {
  const auto spec = resolve_algebra(opts);
  std::optional<QuotientContext> q;
  if (quotient) {
    if (!spec.casimir) throw DomainError("algebra has no Casimir element");
    q.emplace(spec.bracket, *spec.casimir, parse_rational(lambda));
  }
  Outcome o;
  TextReport text;
  if (element) {
    const Polynomial f = parse_polynomial(*element, spec.bracket.context());
    const auto r = center_membership(spec.bracket, f, q ? &*q : nullptr);
    o.result = to_json(r);
    o.result["kind"] = "membership";
    text.line("central", yes_no(r.member));
    for (const auto& w : r.witnesses) {
      std::string label;
      for (auto i : w.tuple) label += (label.empty() ? "" : ",") + spec.bracket.context()->name(i);
      text.line("  (" + label + ")", w.value.to_string());
    }
    o.text = text.str();
    return o;
  }
  unsigned d = 0;
  if (degree) {
    d = *degree;
  } else if (spec.casimir) {
    d = static_cast<unsigned>(spec.casimir->degree());
  } else {
    throw DomainError("--degree is required for an algebra without a Casimir element");
  }
  const auto basis = q ? center_probe_quotient(*q, d) : center_probe_ambient(spec.bracket, d);
  o.result = {{"kind", "center-basis"},
              {"degree", d},
              {"quotient", quotient},
              {"basis", basis_to_json(basis)}};
  if (quotient) o.result["lambda"] = lambda;
  text.line("degree", std::to_string(d));
  text.line("mode", quotient ? "quotient, lambda = " + lambda : "ambient");
  text.line("dimension", std::to_string(basis.size()));
  for (const auto& b : basis) text.line("  basis", b.to_string());
  o.text = text.str();
  return o;
}

Outcome saturate_cmd(const AlgebraOptions& opts, const std::vector<std::string>& seeds,
                     const std::string& lambda, std::uint64_t budget, std::size_t rounds,
                     const std::string& order, const std::string& expect) {
  const auto spec = resolve_algebra(opts);
  if (!spec.casimir) throw DomainError("algebra has no Casimir element");
  if (!expect.empty() && expect != "whole" && expect != "proper") {
    throw DomainError("--expect must be 'whole' or 'proper'");
  }
  QuotientContext q(spec.bracket, *spec.casimir, parse_rational(lambda));
  const auto ps = parse_all(seeds, q.context());
  SaturationOptions so;
  so.step_budget = budget;
  so.max_rounds = rounds;
  so.order = MonomialOrder::parse(order);
  const auto r = saturate_poisson_ideal(q, ps, so);

  Outcome o;
  o.result = to_json(r);
  o.result["kind"] = "saturation";
  if (r.verdict == Verdict::BudgetExhausted) {
    o.code = kBudget;
  } else if ((expect == "whole" && r.verdict != Verdict::WholeRing) ||
             (expect == "proper" && r.verdict != Verdict::ProperStable)) {
    o.code = kFail;
  }
  TextReport text;
  text.line("algebra", spec.name);
  text.line("lambda", lambda);
  text.line("verdict", to_string(r.verdict));
  text.line("rounds", std::to_string(r.rounds));
  std::string sizes;
  for (auto s : r.basis_sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
  text.line("basis sizes", sizes);
  text.line("steps", std::to_string(r.steps));
  if (r.final_basis) {
    for (const auto& g : r.final_basis->generators()) text.line("  basis", g.to_string());
  }
  o.text = text.str();
  return o;
}

Outcome suite_outcome(const SuiteReport& r) {
  Outcome o;
  o.result = to_json(r);
  o.result["kind"] = "suite";
  std::ostringstream os;
  for (const auto& it : r.items) {
    os << (it.pass ? "[pass] " : "[FAIL] ") << std::left << std::setw(48) << it.id << it.detail
       << "\n";
  }
  std::size_t passed = 0;
  for (const auto& it : r.items) passed += it.pass ? 1 : 0;
  os << passed << "/" << r.items.size() << " items passed in " << std::fixed << std::setprecision(2)
     << r.seconds << " s\n";
  o.text = os.str();
  o.code = r.pass ? kPass : kFail;
  return o;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact n-Lie-Poisson algebra toolkit", "nambu"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON report");

  std::function<Outcome()> action;
  std::string command;

  AlgebraOptions alg_show;
  auto* algebra = app.add_subcommand("algebra", "List or show built-in algebras");
  algebra->require_subcommand(1);
  algebra->add_subcommand("list", "List built-in algebra names")->callback([&] {
    command = "algebra list";
    action = algebra_list;
  });
  auto* show = algebra->add_subcommand("show", "Print the multiplication table of an algebra");
  std::string show_name;
  show->add_option("name", show_name, "Algebra name, e.g. elliptic(1)");
  add_algebra_options(show, alg_show);
  show->callback([&] {
    command = "algebra show";
    if (!show_name.empty()) alg_show.algebra = show_name;
    action = [&] { return algebra_show(alg_show); };
  });

  AlgebraOptions alg_bracket;
  std::vector<std::string> bracket_args;
  auto* bracket = app.add_subcommand("bracket", "Evaluate the bracket of expressions");
  add_algebra_options(bracket, alg_bracket);
  bracket->add_option("expr", bracket_args, "Arguments of the bracket")->required();
  bracket->callback([&] {
    command = "bracket";
    action = [&] { return bracket_cmd(alg_bracket, bracket_args); };
  });

  AlgebraOptions alg_verify;
  std::string identity = "all";
  std::size_t trials = 100;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Check bracket identities on seeded random inputs");
  add_algebra_options(verify, alg_verify);
  verify->add_option("--identity", identity, "skew, leibniz, filippov, filippov-generators, strong or all")
      ->check(CLI::IsMember({"skew", "leibniz", "filippov", "filippov-generators", "strong", "all"}));
  verify->add_option("--trials", trials, "Random trials per identity");
  verify->add_option("--seed", verify_seed, "Random seed");
  verify->callback([&] {
    command = "verify";
    action = [&] { return verify_cmd(alg_verify, identity, trials, verify_seed); };
  });

  AlgebraOptions alg_quotient;
  std::string quotient_lambda = "1";
  std::string quotient_action;
  std::vector<std::string> quotient_args;
  auto* quotient = app.add_subcommand("quotient", "Work in P/(C - lambda)");
  quotient->add_option("action", quotient_action, "reduce, bracket, grade or lift")
      ->required()
      ->check(CLI::IsMember({"reduce", "bracket", "grade", "lift"}));
  quotient->add_option("expr", quotient_args, "Expressions")->required();
  quotient->add_option("--lambda", quotient_lambda, "Nonzero rational lambda");
  add_algebra_options(quotient, alg_quotient);
  quotient->callback([&] {
    command = "quotient " + quotient_action;
    action = [&] { return quotient_cmd(alg_quotient, quotient_action, quotient_lambda, quotient_args); };
  });

  std::string root_expr, root_vars;
  unsigned root_k = 2;
  auto* root = app.add_subcommand("root", "k-th root of a homogeneous polynomial");
  root->add_option("expr", root_expr, "Homogeneous polynomial")->required();
  root->add_option("--k", root_k, "Root index")->required();
  root->add_option("--vars", root_vars, "Comma-separated variable order");
  root->callback([&] {
    command = "root";
    action = [&] { return root_cmd(root_expr, root_vars, root_k); };
  });

  std::string closed_expr, closed_vars;
  auto* closed = app.add_subcommand("closed", "Is a homogeneous polynomial closed");
  closed->add_option("expr", closed_expr, "Homogeneous polynomial")->required();
  closed->add_option("--vars", closed_vars, "Comma-separated variable order");
  closed->callback([&] {
    command = "closed";
    action = [&] { return closed_cmd(closed_expr, closed_vars); };
  });

  std::string minroot_expr, minroot_vars;
  auto* minroot = app.add_subcommand("minroot", "Minimal root of a homogeneous polynomial");
  minroot->add_option("expr", minroot_expr, "Homogeneous polynomial")->required();
  minroot->add_option("--vars", minroot_vars, "Comma-separated variable order");
  minroot->callback([&] {
    command = "minroot";
    action = [&] { return minroot_cmd(minroot_expr, minroot_vars); };
  });

  AlgebraOptions alg_center;
  std::string center_element, center_lambda = "1";
  unsigned center_degree = 0;
  bool center_quotient = false;
  auto* center = app.add_subcommand("center", "Center membership or degree-bounded center probe");
  add_algebra_options(center, alg_center);
  auto* element_opt = center->add_option("--element", center_element, "Test this element for centrality");
  auto* degree_opt = center->add_option("--degree", center_degree, "Degree bound of the probe");
  center->add_flag("--quotient", center_quotient, "Work modulo C - lambda");
  center->add_option("--lambda", center_lambda, "Nonzero rational lambda");
  center->callback([&] {
    command = "center";
    action = [&] {
      std::optional<std::string> el;
      std::optional<unsigned> deg;
      if (element_opt->count()) el = center_element;
      if (degree_opt->count()) deg = center_degree;
      return center_cmd(alg_center, el, deg, center_quotient, center_lambda);
    };
  });

  AlgebraOptions alg_saturate;
  std::vector<std::string> saturate_seeds;
  std::string saturate_lambda = "1", expect;
  std::uint64_t budget = kDefaultStepBudget;
  std::size_t rounds = 25;
  std::string order = "grevlex";
  auto* saturate = app.add_subcommand("saturate", "Poisson-ideal saturation in P/(C - lambda)");
  add_algebra_options(saturate, alg_saturate);
  saturate->add_option("--seed", saturate_seeds, "Seed element of the ideal (repeatable)")->required();
  saturate->add_option("--lambda", saturate_lambda, "Nonzero rational lambda");
  saturate->add_option("--budget", budget, "Reduction-step budget");
  saturate->add_option("--rounds", rounds, "Maximum saturation rounds");
  saturate->add_option("--order", order, "Monomial order for the bases: grevlex or lex")
      ->check(CLI::IsMember({"grevlex", "lex"}));
  saturate->add_option("--expect", expect, "Expected verdict: whole or proper");
  saturate->callback([&] {
    command = "saturate";
    action = [&] { return saturate_cmd(alg_saturate, saturate_seeds, saturate_lambda, budget, rounds, order, expect); };
  });

  auto* casimir_suite = app.add_subcommand("casimir-suite", "Centrality and closedness of built-in Casimirs");
  casimir_suite->callback([&] {
    command = "casimir-suite";
    action = [] { return suite_outcome(run_casimir_suite()); };
  });

  std::uint64_t suite_seed = 0;
  auto* regression_suite = app.add_subcommand("paper-suite", "Full regression battery");
  regression_suite->add_option("--seed", suite_seed, "Random seed");
  regression_suite->callback([&] {
    command = "paper-suite";
    action = [&] { return suite_outcome(run_regression_suite(suite_seed)); };
  });

  // --json is accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", as_json, "Emit a JSON report");
    for (auto* nested : sub->get_subcommands({})) nested->add_flag("--json", as_json, "Emit a JSON report");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  auto emit_error = [&](const std::string& kind, const std::string& message, int code,
                        const json& extra = json::object()) {
    if (as_json) {
      json e = error_json(kind, message);
      e.update(extra);
      out << json{{"command", command}, {"ok", false}, {"exit_code", code}, {"error", e}}.dump(2) << "\n";
    } else {
      err << "nambu: " << message << "\n";
    }
    return code;
  };

  try {
    Outcome o = action();
    if (as_json) {
      const json doc{{"command", command}, {"ok", o.code == kPass}, {"exit_code", o.code}, {"result", o.result}};
      out << doc.dump(2) + "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const ParseError& e) {
    return emit_error("parse", e.what(), kUsage, {{"offset", e.offset()}, {"expected", e.expected()}});
  } catch (const BudgetExhausted& e) {
    return emit_error("budget", e.what(), kBudget);
  } catch (const Error& e) {
    return emit_error("domain", e.what(), kUsage);
  }
}

} // namespace nambu::cli
