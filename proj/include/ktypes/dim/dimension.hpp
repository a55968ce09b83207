#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktypes/semantics/context.hpp"
#include "ktypes/types/eq_type.hpp"

namespace ktypes::dim {

struct KrullDim {
  std::size_t kdim = 0;
  /// Diagram indices p_0 ⊢ p_1 ⊢ ... ⊢ p_n ⊢ p: diagrams strictly shrinking
  /// along the list, all satisfying p. Lexicographically least among the
  /// longest chains.
  std::vector<std::size_t> chain;
};

/// Longest strict chain of prime types below p, i.e. the height of the
/// up-set sat(p) in the diagram order. Throws InconsistentType.
KrullDim krull_dim(const types::EqType& p);

struct AlgDim {
  std::size_t odim = 0;
  /// Variable indices, ascending; lexicographically least of maximal size.
  std::vector<int> oset;
};

/// Largest |I| such that o(z_I/A) ∧ p is consistent. Throws InconsistentType.
AlgDim alg_dim(const types::EqType& p);

/// ξ_h for the minimal diagrams of p that are transcendental on I, so that
/// o(z_I/A) ⊢ p ↔ ⋁ξ_h. Throws TrivialType, InconsistentType, and
/// BadIndexSet when |I| differs from alg_dim(p) or o(z_I/A) ∧ p is
/// inconsistent.
std::vector<logic::EqFormula> lksihn_decompose(const types::EqType& p, std::span<const int> indep);

struct Check {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// Human-readable descriptions of the failing instances.
  std::vector<std::string> details;
  /// Whether the instances cover the whole formula lattice.
  bool complete = true;
  /// The theorem's hypothesis was verified on this context (D0 and D3).
  bool hypothesis_met = true;
  bool pass() const { return failures == 0; }
};

/// For every prime p and equational q in the lattice, both non-trivial and
/// q consistent, with q ⊢ p ⊬ q: alg_dim(q) < alg_dim(p).
Check verify_decrease(const semantics::Context& ctx, std::size_t lattice_cap = 4096);
/// For every consistent equational type: kdim <= odim <= vars.
Check verify_k_le_o(const semantics::Context& ctx, std::size_t lattice_cap = 4096);
/// kdim(p) = 0 iff p is maximal, for every prime p.
Check verify_kdim_zero(const semantics::Context& ctx);
/// alg_dim(q) is the maximum of alg_dim over the prime components of q.
Check verify_maxdim(const semantics::Context& ctx, std::size_t lattice_cap = 4096);
/// For non-empty A and non-trivial q: alg_dim(q) = 0 iff q is a finite
/// disjunction of maximal formulas. Vacuous for empty A.
Check verify_odim_zero(const semantics::Context& ctx, std::size_t lattice_cap = 4096);
/// (a) o(z/A) consistent for 1..vars variables; (b) o(z/A) ⊆ o(z/B) for
/// the models B ⊇ A with one more element; (c) o(z/A) non-trivial when A is
/// non-empty or vars > 1.
Check verify_dp(const semantics::Context& ctx);

struct KeqoReport {
  std::size_t param_bound = 0;
  /// No B ⊇ A with |B| <= param_bound carries a consistent q(z,x) entailing
  /// o(x/B).
  bool hypothesis_holds = true;
  std::size_t parameter_sets = 0;
  std::optional<semantics::FiniteStructure> witness_params;
  std::optional<std::string> witness_formula;
  int witness_vars = 0;
  /// kdim = odim over the lattice; asserted only when the hypothesis holds.
  Check equality;
  bool equality_asserted = false;
};

KeqoReport check_keqo(const semantics::Context& ctx, std::size_t param_bound, std::size_t lattice_cap = 4096);

/// Whether D0 holds for 1..vars variables and D3 for one variable over A.
bool locally_krull_minimal_here(const semantics::Context& ctx);

struct DimReport {
  std::string type;
  KrullDim k;
  AlgDim o;
  std::vector<Check> checks;
};

/// kdim and odim of p with replay checks of both witnesses.
DimReport dim_report(const types::EqType& p);

}  // namespace ktypes::dim
