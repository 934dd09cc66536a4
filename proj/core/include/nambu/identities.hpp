#pragma once

#include "nambu/bracket.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nambu {

struct IdentityFailure {
  std::vector<std::string> inputs;
  std::string defect;
};

/// Outcome of an identity check. `pass` is true iff every defect was zero.
struct IdentityReport {
  std::string identity;
  std::size_t arity = 0;
  std::size_t trials = 0;
  std::vector<IdentityFailure> failures;
  bool pass = true;
};

struct TrialConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned max_degree = 3;
  std::int64_t coeff_bound = 9;
  std::size_t max_terms = 4;
  /// Failures beyond this count are tallied but not recorded.
  std::size_t max_recorded = 5;
};

/// Repeated-argument and transposition defects.
IdentityReport verify_skew(const Bracket& b, const TrialConfig& cfg = {});
/// {.., xy, ..} - x{.., y, ..} - {.., x, ..}y in a random slot.
IdentityReport verify_leibniz(const Bracket& b, const TrialConfig& cfg = {});
/// Filippov identity on random inputs. For a non n-Lie bracket this doubles
/// as a counterexample search: failures are the witnesses.
IdentityReport verify_filippov(const Bracket& b, const TrialConfig& cfg = {});
/// Filippov identity on every generator (2n-1)-tuple.
IdentityReport verify_filippov_generators(const Bracket& b);
/// Strong identity sum_i (-1)^i {u.., v_i}{v_1..^v_i..v_{n+1}} on random inputs
/// followed by every generator tuple.
IdentityReport verify_strong(const Bracket& b, const TrialConfig& cfg = {});

/// Defect of the Filippov identity for u (n entries) and v (n-1 entries).
Polynomial filippov_defect(const Bracket& b, std::span<const Polynomial> u,
                           std::span<const Polynomial> v);
/// Defect of the strong identity for u (n-1 entries) and v (n+1 entries).
Polynomial strong_defect(const Bracket& b, std::span<const Polynomial> u,
                         std::span<const Polynomial> v);

} // namespace nambu
