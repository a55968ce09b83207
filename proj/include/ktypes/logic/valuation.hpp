#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ktypes/bitvec.hpp"
#include "ktypes/logic/formula.hpp"
#include "ktypes/logic/signature.hpp"

namespace ktypes::logic {

/// Every atom over `vars` variables and the given parameters, one per
/// semantic atom (equalities canonically oriented, s = s omitted).
/// Order: relation atoms in signature order with argument tuples enumerated
/// lexicographically over the slot list (variables, then params as given),
/// followed by equalities s_i = s_j for i < j.
std::vector<Atom> atom_universe(const Signature& sig, int vars,
                                std::span<const std::string> params);

/// Truth assignment over a finite atom universe.
///
/// The checked constructor requires the assignment to be congruent: the true
/// equalities generate an equivalence on slots that contains no false
/// equality of the universe and relation atoms over equivalent argument
/// tuples agree. Only congruent valuations are truth assignments of actual
/// tuples. `unconstrained` skips the check; it is what truth-table
/// reasoning about formulas as Boolean functions needs.
class Valuation {
 public:
  Valuation(std::vector<Atom> universe, BitVec truth);
  static Valuation unconstrained(std::vector<Atom> universe, BitVec truth);

  const std::vector<Atom>& universe() const { return universe_; }
  const BitVec& truth() const { return truth_; }

  /// Throws UnknownAtom for atoms outside the universe.
  bool value(const Atom& a) const;
  bool is_congruent() const;

 private:
  struct Unchecked {};
  Valuation(std::vector<Atom> universe, BitVec truth, Unchecked);

  std::vector<Atom> universe_;
  std::map<Atom, std::size_t> index_;
  BitVec truth_;
};

/// Standard Boolean evaluation. Throws UnknownAtom when f mentions an atom
/// outside v's universe.
bool eval(const Formula& f, const Valuation& v);

}  // namespace ktypes::logic
