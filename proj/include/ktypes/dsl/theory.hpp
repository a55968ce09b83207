#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ktypes/logic/formula.hpp"
#include "ktypes/logic/signature.hpp"

namespace ktypes::dsl {

/// Universal closure of a quantifier-free matrix. Variable i of `matrix` is
/// bound[i].
struct Axiom {
  std::vector<std::string> bound;
  logic::Formula matrix;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

/// A universal theory over a finite relational signature.
struct TheorySpec {
  std::string name;
  logic::Signature signature;
  std::vector<Axiom> axioms;

  friend bool operator==(const TheorySpec&, const TheorySpec&) = default;
};

/// Name-level description of a finite structure, before it is checked
/// against a signature.
struct StructureDoc {
  std::vector<std::string> universe;
  std::map<std::string, std::set<std::vector<std::string>>> relations;

  friend bool operator==(const StructureDoc&, const StructureDoc&) = default;
};

}  // namespace ktypes::dsl
