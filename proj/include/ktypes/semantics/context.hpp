#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ktypes/bitvec.hpp"
#include "ktypes/dsl/theory.hpp"
#include "ktypes/logic/formula.hpp"
#include "ktypes/semantics/completion.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::semantics {

struct ContextOptions {
  /// Cap on |A| + vars; exceeding it throws LimitExceeded.
  std::size_t max_elements = 6;
  SearchOptions search;
  /// Display names for the variables; empty means x for one variable and
  /// z1..zn otherwise.
  std::vector<std::string> var_names;
};

/// One realizable positive diagram together with a finite model realizing it.
struct Diagram {
  /// Over Context::universe(): the variable atoms true of the tuple.
  BitVec atoms;
  /// A model on A plus the new tuple elements, and the tuple itself.
  FiniteStructure witness;
  std::vector<int> tuple;
};

/// Everything there is to know about equational formulas in `vars`
/// variables over the parameter structure A, modulo a universal theory T.
///
/// Exactness. For universal relational T a substructure of a model is a
/// model, and an extension of A containing a tuple b has the substructure
/// A ∪ b. So "some model containing A has a tuple with positive diagram D"
/// is equivalent to "some completion of the relations on A plus the
/// elements named by the (merged) variable slots is a model inducing D".
/// Every variable is either identified with an element of A or assigned to
/// one of the new elements (an equality pattern); the completion search then
/// runs over all tuples meeting a new element. The resulting diagram list is
/// exact: A ⊢ φ for a quantifier-free φ iff φ holds at every diagram, with
/// ground atoms read off A.
///
/// Diagrams are listed in canonical order (fewer atoms first, then by the
/// sorted atom index list).
class Context {
 public:
  /// Throws NotAModel when A violates T and LimitExceeded beyond the
  /// element cap.
  Context(dsl::TheorySpec theory, FiniteStructure params, int vars, const ContextOptions& opts = {});

  const dsl::TheorySpec& theory() const { return theory_; }
  const FiniteStructure& params() const { return params_; }
  int vars() const { return vars_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<std::string>& param_names() const { return params_.names(); }
  const ContextOptions& options() const { return opts_; }

  /// Atoms over the variables and parameters that mention a variable.
  const std::vector<logic::Atom>& universe() const { return universe_; }
  std::optional<std::size_t> atom_index(const logic::Atom& a) const;

  const std::vector<Diagram>& diagrams() const { return diagrams_; }
  std::size_t size() const { return diagrams_.size(); }
  std::optional<std::size_t> find_diagram(const BitVec& atoms) const;

  /// Diagrams containing diagram i (including i).
  const BitVec& above(std::size_t i) const { return above_[i]; }
  /// Diagrams contained in diagram i (including i).
  const BitVec& below(std::size_t i) const { return below_[i]; }
  BitVec all() const;

  /// Atoms true in every diagram (the entailed variable atoms).
  const BitVec& entailed_atoms() const { return entailed_; }
  /// The diagram equal to entailed_atoms(), when it is realizable.
  std::optional<std::size_t> least() const { return least_; }

  /// Truth of a quantifier-free formula at diagram i. Throws UnknownAtom for
  /// atoms outside the signature/parameter range.
  bool eval(const logic::Formula& f, std::size_t i) const;
  /// Diagrams satisfying f.
  BitVec satisfying(const logic::Formula& f) const;
  BitVec satisfying(std::span<const logic::Formula> fs) const;

  /// Atom list and conjunction of a diagram (Top for the empty diagram).
  std::vector<logic::Atom> atoms_of(const BitVec& atoms) const;
  logic::EqFormula conjunction(const BitVec& atoms) const;
  std::string render_atoms(const BitVec& atoms) const;
  std::vector<std::string> render_atom_list(const BitVec& atoms) const;
  std::string render(const logic::Formula& f) const;

  /// Positive diagram of `tuple` in S over A. Throws NotASubstructure when A
  /// is not an induced substructure of S (by element names) and
  /// InvalidArgument on a tuple of the wrong length.
  BitVec diagram_of(const FiniteStructure& s, std::span<const int> tuple) const;

  /// Up-set generated by a set of diagrams.
  BitVec up_closure(const BitVec& diagrams) const;
  /// Inclusion-minimal members of a diagram set, in canonical order.
  std::vector<std::size_t> minimal(const BitVec& diagrams) const;

 private:
  bool eval_atom(const logic::Atom& a, std::size_t i) const;
  void enumerate();

  dsl::TheorySpec theory_;
  FiniteStructure params_;
  int vars_;
  ContextOptions opts_;
  std::vector<std::string> var_names_;
  std::vector<logic::Atom> universe_;
  std::map<logic::Atom, std::size_t> atom_pos_;
  std::vector<Diagram> diagrams_;
  std::vector<BitVec> above_, below_;
  BitVec entailed_;
  std::optional<std::size_t> least_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(const dsl::TheorySpec& theory, const FiniteStructure& params, int vars,
                        const ContextOptions& opts = {});

/// The realizable diagrams of `vars`-tuples over A.
std::vector<Diagram> realizable_diagrams(const dsl::TheorySpec& theory, const FiniteStructure& params,
                                         int vars, const ContextOptions& opts = {});

/// premises ⊢_A conclusion: no model of T containing A has a tuple
/// satisfying all premises and not the conclusion.
bool entails(const Context& ctx, std::span<const logic::Formula> premises, const logic::Formula& conclusion);
bool entails(const dsl::TheorySpec& theory, const FiniteStructure& params,
             std::span<const logic::Formula> premises, const logic::Formula& conclusion, int vars,
             const ContextOptions& opts = {});

/// Some tuple in some model containing A satisfies every formula of p.
bool consistent(const Context& ctx, std::span<const logic::Formula> p);
bool consistent(const dsl::TheorySpec& theory, const FiniteStructure& params,
                std::span<const logic::Formula> p, int vars, const ContextOptions& opts = {});

}  // namespace ktypes::semantics
