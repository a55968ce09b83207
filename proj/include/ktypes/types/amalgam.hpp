#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/completion.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::types {

struct Amalgam {
  semantics::FiniteStructure model;
  /// embed_m[i] is the element of `model` that element i of M goes to.
  std::vector<int> embed_m;
  std::vector<int> embed_n;
};

/// One placement tried by the search: which elements of N \ A were
/// identified with elements of M \ A, how many extra elements were added,
/// and why it was rejected ("clash at u(b)" when M and N disagree on an
/// identified tuple, "no completion" when no model extends the fixed
/// tuples).
struct AmalgamAttempt {
  std::vector<std::pair<std::string, std::string>> identified;
  std::size_t extra = 0;
  std::string outcome;
};

struct AmalgamResult {
  /// Empty when no amalgam exists up to the size bound; this is not a
  /// refutation of amalgamation in general.
  std::optional<Amalgam> amalgam;
  std::size_t size_bound = 0;
  std::size_t candidates = 0;
  /// Placements rejected, clashes included.
  std::size_t rejected = 0;
  /// Rejected placements in search order, at most kMaxAttempts of them.
  std::vector<AmalgamAttempt> attempts;
  static constexpr std::size_t kMaxAttempts = 64;
};

/// Searches for a model P of T into which M and N embed over A, with
/// |P| <= |M| + |N| - |A| + slack. The universe is A, then M \ A, then
/// N \ A (renamed on a name clash), then slack elements. The disjoint
/// placement is tried first, then identifications of elements of N \ A with
/// elements of M \ A, fewest first; for each placement, tuples inside M or
/// inside N are fixed and the remaining tuples are completed by search.
///
/// Throws NotASubstructure when A is not an induced substructure of M or N
/// (matched by element names) and NotAModel when M or N is not a model.
AmalgamResult amalgamate(const dsl::TheorySpec& theory, const semantics::FiniteStructure& a,
                         const semantics::FiniteStructure& m, const semantics::FiniteStructure& n,
                         std::size_t slack);

}  // namespace ktypes::types
