#pragma once

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::semantics {

/// S |= T: every axiom matrix holds under every assignment of elements of S
/// to its bound variables. Throws SignatureMismatch when S is over another
/// signature.
bool is_model(const FiniteStructure& s, const dsl::TheorySpec& t);

/// Truth of a quantifier-free formula in S with variable i sent to
/// assignment[i] and parameters resolved by element name.
bool holds_in(const FiniteStructure& s, const logic::Formula& f, std::span<const int> assignment);

}  // namespace ktypes::semantics
