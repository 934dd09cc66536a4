#include "nambu/report.hpp"

namespace nambu {

using nlohmann::json;

json to_json(const Polynomial& p) { return p.to_string(); }

json to_json(const IdentityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"defect", f.defect}});
  return {{"identity", r.identity},
          {"arity", r.arity},
          {"trials", r.trials},
          {"failures", failures},
          {"pass", r.pass}};
}

json to_json(const AlgebraSpec& spec) {
  const auto& ctx = spec.bracket.context();
  json constants = json::array();
  for (const auto& t : increasing_tuples(ctx->size(), spec.bracket.arity())) {
    const Polynomial v = spec.bracket.on_generators(t);
    if (v.is_zero()) continue;
    json args = json::array();
    for (auto i : t) args.push_back(ctx->name(i));
    constants.push_back({{"args", args}, {"value", v.to_string()}});
  }
  json params = json::object();
  for (const auto& [k, v] : spec.parameters) params[k] = to_string(v);
  json out = {{"name", spec.name},
              {"generators", ctx->names()},
              {"arity", spec.bracket.arity()},
              {"parameters", params},
              {"constants", constants},
              {"casimir", spec.casimir ? json(spec.casimir->to_string()) : json(nullptr)}};
  if (spec.simple) out["simple"] = *spec.simple;
  return out;
}

json to_json(const RootResult& r) {
  json out = {{"k", r.k}, {"found", r.root.has_value()}};
  if (r.root) {
    out["root"] = r.root->to_string();
    out["alpha"] = to_string(r.alpha);
  }
  return out;
}

json to_json(const ClosedResult& r) {
  json out = {{"closed", r.closed}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const MembershipResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"tuple", w.tuple}, {"value", w.value.to_string()}});
  return {{"member", r.member}, {"witnesses", witnesses}};
}

json to_json(const SaturationReport& r) {
  json seeds = json::array();
  for (const auto& s : r.seeds) seeds.push_back(s.to_string());
  json basis = json::array();
  if (r.final_basis) {
    for (const auto& g : r.final_basis->generators()) basis.push_back(g.to_string());
  }
  return {{"seeds", seeds},
          {"rounds", r.rounds},
          {"basis_sizes", r.basis_sizes},
          {"final_basis", basis},
          {"verdict", to_string(r.verdict)},
          {"steps", r.steps}};
}

json to_json(const std::vector<GradedClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    out.push_back({{"residue", c.residue}, {"representative", c.representative.to_string()}});
  }
  return out;
}

json to_json(const SuiteReport& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    items.push_back({{"id", it.id},
                     {"criterion", it.criterion},
                     {"description", it.description},
                     {"pass", it.pass},
                     {"detail", it.detail},
                     {"seconds", it.seconds}});
  }
  return {{"suite", r.suite}, {"seed", r.seed}, {"pass", r.pass}, {"seconds", r.seconds}, {"items", items}};
}

json basis_to_json(const std::vector<Polynomial>& basis) {
  json out = json::array();
  for (const auto& b : basis) out.push_back(b.to_string());
  return out;
}

} // namespace nambu
