#pragma once

#include <vector>

#include "ktypes/logic/formula.hpp"

namespace ktypes::logic {

/// A disjunction of conjunctions of atoms. Each conjunct is a sorted,
/// duplicate-free atom list; the conjuncts form an inclusion antichain and
/// are sorted lexicographically. No conjuncts means Bot, one empty conjunct
/// means Top.
struct AntichainDnf {
  std::vector<std::vector<Atom>> terms;

  friend bool operator==(const AntichainDnf&, const AntichainDnf&) = default;
};

AntichainDnf antichain_dnf(const EqFormula& f);
EqFormula from_dnf(const AntichainDnf& dnf);

/// Canonical representative of f under Boolean equivalence of monotone
/// formulas. Idempotent.
EqFormula normal_form(const EqFormula& f);

}  // namespace ktypes::logic
