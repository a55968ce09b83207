#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/logic/formula.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::dsl {

// All parsers throw ktypes::ParseError (with line/column) on bad input.
//
// Theory files:
//   theory <name>
//   relations: <name>/<arity>[, ...]
//   axiom: all <v>[,<v>...]. <qf-formula>
// Formulas: atoms r(s,...), s = t, s != t, true, false, connectives
// ! & | -> with the usual precedence (! binds tightest, -> is right
// associative and weakest). '#' starts a comment running to end of line.

TheorySpec parse_theory(std::string_view text);

/// Accepts either the JSON document
///   {"universe":["a","b"],"relations":{"r":[["a","b"]]}}
/// or the line-oriented form
///   universe: a, b
///   r: (a,b)
StructureDoc parse_structure_doc(std::string_view text);
semantics::FiniteStructure parse_structure(std::string_view text, const logic::Signature& sig);

enum class FormulaMode { Equational, QuantifierFree };

/// Identifiers resolve first against `vars` (variable i is vars[i]), then
/// against `params`. Equational mode rejects '!', '!=' and '->' with
/// NegationNotAllowed.
logic::Formula parse_formula(std::string_view text, const logic::Signature& sig,
                             std::span<const std::string> vars,
                             std::span<const std::string> params, FormulaMode mode);
logic::EqFormula parse_eq_formula(std::string_view text, const logic::Signature& sig,
                                  std::span<const std::string> vars,
                                  std::span<const std::string> params);
/// A type is one or more equational formulas separated by ';'.
std::vector<logic::EqFormula> parse_eq_type(std::string_view text, const logic::Signature& sig,
                                            std::span<const std::string> vars,
                                            std::span<const std::string> params);

}  // namespace ktypes::dsl
