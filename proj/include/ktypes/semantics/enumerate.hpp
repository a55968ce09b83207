#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/completion.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::semantics {

/// Isomorphism-invariant key: the least relation-table encoding over all
/// permutations of the elements at positions >= fixed (the first `fixed`
/// elements stay in place). Names are ignored.
std::string canonical_key(const FiniteStructure& s, std::size_t fixed = 0);

/// Models of T with exactly n elements (named a, b, c, ...), one per
/// isomorphism class, in order of their first appearance in the completion
/// order.
std::vector<FiniteStructure> models_up_to_iso(const dsl::TheorySpec& theory, std::size_t n,
                                              const SearchOptions& opts = {});

/// Models B of T with |B| = size that contain A as an induced substructure
/// on their first |A| elements, one per isomorphism class over A. New
/// elements get fresh names not used in A.
std::vector<FiniteStructure> extensions(const dsl::TheorySpec& theory, const FiniteStructure& a,
                                        std::size_t size, const SearchOptions& opts = {});

}  // namespace ktypes::semantics
