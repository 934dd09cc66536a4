#pragma once

#include "nambu/bracket.hpp"
#include "nambu/groebner.hpp"
#include "nambu/quotient.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nambu {

// ------------------------------------------------------------------- roots

/// C = alpha * root^k, with root monic under grevlex; no root when absent.
struct RootResult {
  unsigned k = 0;
  std::optional<Polynomial> root;
  Rational alpha;
};

/// Coefficient recursion for a k-th root of a homogeneous C. A returned root
/// has passed the exact check alpha * root^k == C. Throws DomainError for
/// non-homogeneous or constant C, k < 2, or when no leading variable is found
/// even after shearing.
RootResult kth_root(const Polynomial& c, unsigned k);

struct ClosedResult {
  bool closed = true;
  /// Root of smallest degree when C is a proper power.
  std::optional<RootResult> witness;
};

ClosedResult is_closed_homogeneous(const Polynomial& c);
/// Smallest-degree c with C in K[c]; monic.
Polynomial minimal_root_homogeneous(const Polynomial& c);

// ------------------------------------------------------------------ center

/// A nonvanishing minor or bracket, labelled by the index tuple that
/// produced it.
struct CenterWitness {
  IndexTuple tuple;
  Polynomial value;
};

struct MembershipResult {
  bool member = true;
  std::vector<CenterWitness> witnesses;
};

/// f is central iff every 2x2 minor df/dx_i dC/dx_j - df/dx_j dC/dx_i
/// vanishes (or reduces to zero in the quotient, when given).
MembershipResult center_membership_jacobian(const JacobianBracket& b, const Polynomial& f,
                                            const QuotientContext* q = nullptr);
/// f is central iff {f, e_T} = 0 for every increasing (n-1)-tuple T.
MembershipResult center_membership_table(const TableBracket& b, const Polynomial& f,
                                         const QuotientContext* q = nullptr);
MembershipResult center_membership(const Bracket& b, const Polynomial& f,
                                   const QuotientContext* q = nullptr);

/// Rank of the Jacobian matrix [d f_i / d x_j] over the fraction field,
/// by fraction-free elimination.
std::size_t jacobian_rank(std::span<const Polynomial> fs);
/// True iff the Jacobian of fs has rank below fs.size().
bool jacobian_dependence(std::span<const Polynomial> fs);

/// Basis (row-reduced, leading monomial first) of the central elements of
/// the quotient spanned by standard monomials of degree <= max_degree.
std::vector<Polynomial> center_probe_quotient(const QuotientContext& q, unsigned max_degree);
/// Same linear system in the ambient algebra over all monomials of degree
/// <= max_degree.
std::vector<Polynomial> center_probe_ambient(const Bracket& b, unsigned max_degree);

// -------------------------------------------------------------- saturation

enum class Verdict { WholeRing, ProperStable, BudgetExhausted };

std::string to_string(Verdict v);

struct SaturationOptions {
  std::size_t max_rounds = 25;
  std::uint64_t step_budget = kDefaultStepBudget;
  /// Order for the intermediate bases; the verdict does not depend on it.
  MonomialOrder order = MonomialOrder::grevlex();
};

struct SaturationReport {
  std::vector<Polynomial> seeds;
  std::size_t rounds = 0;
  /// Groebner basis size at the start of each round.
  std::vector<std::size_t> basis_sizes;
  std::optional<GroebnerBasis> final_basis;
  Verdict verdict = Verdict::BudgetExhausted;
  std::uint64_t steps = 0;
};

/// Closes (seeds, C - lambda) under bracketing with generator tuples until
/// 1 enters the ideal, nothing new appears, or the budget runs out.
SaturationReport saturate_poisson_ideal(const QuotientContext& q, std::span<const Polynomial> seeds,
                                        const SaturationOptions& options = {});

} // namespace nambu
