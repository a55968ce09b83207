#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/structure.hpp"

// Bundled theories and structures. The same texts ship as files under
// fixtures/ in the source tree.
//
// Theories: DT (disjoint unions of tournaments), LO_total (DT plus
// totality), free (r/2, no axioms), LO_inj (LO_total plus a unary mark and
// injective predecessors).
// Structures: A1, M1, N1 and empty over r/2; A_inj, M_inj, N_inj over LO_inj.
namespace ktypes::fixtures {

std::optional<std::string_view> theory_text(std::string_view name);
std::optional<std::string_view> structure_text(std::string_view name);
std::vector<std::string> theory_names();
std::vector<std::string> structure_names();

/// Throws InvalidArgument for unknown names.
dsl::TheorySpec theory(std::string_view name);
semantics::FiniteStructure structure(std::string_view name, const logic::Signature& sig);

}  // namespace ktypes::fixtures
