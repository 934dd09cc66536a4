#pragma once

#include "nambu/analysis.hpp"
#include "nambu/identities.hpp"
#include "nambu/structures.hpp"
#include "nambu/suite.hpp"

#include <nlohmann/json.hpp>

namespace nambu {

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const AlgebraSpec& spec);
nlohmann::json to_json(const RootResult& r);
nlohmann::json to_json(const ClosedResult& r);
nlohmann::json to_json(const MembershipResult& r);
nlohmann::json to_json(const SaturationReport& r);
nlohmann::json to_json(const std::vector<GradedClass>& classes);
nlohmann::json to_json(const SuiteReport& r);
/// A center probe basis as a list of polynomial strings.
nlohmann::json basis_to_json(const std::vector<Polynomial>& basis);

} // namespace nambu
