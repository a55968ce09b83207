#pragma once

#include <span>
#include <string>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/logic/formula.hpp"

namespace ktypes::dsl {

/// Default variable names: "x" for a single variable, otherwise z1..zn.
std::vector<std::string> default_var_names(int vars);

std::string render_slot(const logic::Slot& s, std::span<const std::string> vars);
std::string render_atom(const logic::Atom& a, std::span<const std::string> vars);
/// Inverse of parse_formula for formulas built by the smart constructors.
std::string render(const logic::Formula& f, std::span<const std::string> vars);

std::string render_theory(const TheorySpec& t);
std::string render_structure_text(const StructureDoc& doc);
std::string render_structure_json(const StructureDoc& doc);

}  // namespace ktypes::dsl
