#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ktypes/bitvec.hpp"
#include "ktypes/error.hpp"
#include "ktypes/logic/formula.hpp"
#include "ktypes/semantics/context.hpp"

namespace ktypes::types {

/// A finite set of equational formulas over a fixed context (T, A, vars).
///
/// Each equational formula is monotone in the atoms, so the diagrams
/// satisfying it form an up-set of the realizable-diagram order; a type is
/// determined up to equivalence over A by the up-set sat() of diagrams
/// satisfying all of its generators, and p ⊢ φ iff every diagram of sat()
/// satisfies φ.
class EqType {
 public:
  /// Generators are stored in normal form. Throws UnknownAtom for atoms
  /// outside the context.
  EqType(semantics::ContextPtr ctx, std::vector<logic::EqFormula> generators);

  /// The type generated by the canonical formula of an up-set.
  static EqType from_upset(semantics::ContextPtr ctx, const BitVec& upset);
  /// The prime type generated by the conjunction of diagram i.
  static EqType of_diagram(semantics::ContextPtr ctx, std::size_t i);
  static EqType trivial(semantics::ContextPtr ctx);

  const semantics::Context& context() const { return *ctx_; }
  const semantics::ContextPtr& context_ptr() const { return ctx_; }
  const std::vector<logic::EqFormula>& generators() const { return generators_; }

  /// Diagrams satisfying every generator.
  const BitVec& sat() const { return sat_; }
  /// ⋁ over the minimal diagrams D of sat() of ⋀D; Bot when inconsistent.
  logic::EqFormula canonical() const;

  bool entails(const logic::Formula& f) const;
  bool entails(const EqType& q) const { return sat_.is_subset_of(q.sat_); }
  bool equivalent(const EqType& q) const { return sat_ == q.sat_; }

 private:
  semantics::ContextPtr ctx_;
  std::vector<logic::EqFormula> generators_;
  BitVec sat_;
};

/// Canonical formula of a set of diagrams: the disjunction of the
/// conjunctions of its minimal members.
logic::EqFormula upset_formula(const semantics::Context& ctx, const BitVec& diagrams);

struct TypeClassification {
  bool trivial = false;
  bool consistent = false;
  bool prime = false;
  bool maximal = false;
  bool principal = true;
  std::optional<logic::EqFormula> isolating_formula;
};

/// consistent: sat() is non-empty. trivial: sat() is every diagram.
/// prime: sat() has a least element. maximal: sat() is a single diagram.
/// principal: always, with the canonical formula as isolating formula (the
/// atom universe is finite, so there are finitely many equational formulas
/// up to equivalence).
TypeClassification classify(const EqType& p);

/// The equational type of `tuple` (elements of S) over A.
/// Throws NotAModel when S is not a model, NotASubstructure when A is not
/// contained in S.
EqType eqn_tp(semantics::ContextPtr ctx, const semantics::FiniteStructure& s, std::span<const int> tuple);

/// The equational consequences of p, generated by its canonical formula.
/// Throws InconsistentType.
EqType circ_part(const EqType& p);

/// p•: one generator ¬ξ_D for each minimal diagram D of p, where ξ_D is the
/// canonical formula of the diagrams not contained in D. ¬ξ belongs to p•
/// exactly when p does not entail ξ. Throws InconsistentType.
std::vector<logic::Formula> bullet_part(const EqType& p);
/// Membership of a formula ¬ξ (ξ equational) in p•.
bool bullet_contains(const EqType& p, const logic::Formula& negated);

struct TranscendentalType {
  bool consistent = false;
  /// Every formula of o(z/A) is entailed (only one diagram exists).
  bool trivial = false;
  /// The realizing diagram: the least one, whose atoms are all entailed.
  std::optional<std::size_t> witness;
};

/// o(z/A): realized by the diagram of entailed atoms, when that diagram is
/// realizable.
TranscendentalType transcendental_type(const semantics::Context& ctx);

/// Bit i of the mask selects variable i.
using VarMask = unsigned long long;

/// Diagrams realizing o(z_I/A): their atoms over the I-variables (and
/// parameters) are all entailed. Every diagram for I = ∅.
BitVec transcendental_on(const semantics::Context& ctx, VarMask vars);

/// The prime components of q: one prime type per minimal diagram of sat(q).
/// Empty iff q is inconsistent.
std::vector<EqType> prime_decomposition(const EqType& q);

class NotKrullMinimalError : public Error {
 public:
  NotKrullMinimalError(std::string msg, std::vector<std::size_t> chain)
      : Error(Errc::NotKrullMinimalHere, std::move(msg)), chain_(std::move(chain)) {}
  /// Diagram indices D ⊂ E: p_D is a prime component that is neither
  /// trivial nor maximal.
  const std::vector<std::size_t>& chain() const { return chain_; }

 private:
  std::vector<std::size_t> chain_;
};

/// Maximal formulas whose disjunction is equivalent to p: the conjunctions
/// of the minimal diagrams of sat(p). Throws TrivialType, InconsistentType,
/// and NotKrullMinimalError when some minimal diagram has a proper
/// extension among the realizable diagrams.
std::vector<logic::EqFormula> maximal_decomposition(const EqType& p);

/// p(z_keep, -): the formulas over the kept variables entailed by p, as a
/// type in the context over those variables (named as in p's context).
EqType project_type(const EqType& p, std::span<const int> keep);

struct Lattice {
  /// Up-sets of the diagram order, i.e. equational formulas up to
  /// equivalence, in canonical order.
  std::vector<BitVec> upsets;
  /// False when the full lattice exceeded the cap and only principal
  /// up-sets, their pairwise unions, and the empty and full up-sets were
  /// listed.
  bool complete = true;
};

Lattice enumerate_lattice(const semantics::Context& ctx, std::size_t cap = 4096);

}  // namespace ktypes::types
