#pragma once

#include <string>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/context.hpp"

namespace ktypes::types {

struct AuditOptions {
  std::size_t max_param_size = 2;
  int max_tuple_vars = 1;
  /// D2 checks extensions B of A with |B| <= |A| + d2_slack.
  std::size_t d2_slack = 2;
  semantics::ContextOptions context;
};

/// One piece of evidence. `params` is the parameter structure A; the
/// formula and diagram strings use the context's variable names and parse
/// back with the theory signature.
struct AuditWitness {
  semantics::FiniteStructure params;
  int vars = 1;
  std::string formula;
  std::vector<std::vector<std::string>> diagrams;
  /// An extension of A (D2 failures only).
  std::optional<semantics::FiniteStructure> extension;
  std::string note;
};

struct AxiomVerdict {
  bool pass = true;
  std::size_t instances = 0;
  std::vector<AuditWitness> witnesses;
};

/// Verdicts on D0-D3 over every parameter structure of size <= bound, one
/// per isomorphism class (the empty structure included).
///
/// D0: o(z/A) is consistent, i.e. the diagrams have a least element; a
///     failure lists the minimal diagrams, whose disjunction is entailed
///     while no disjunct is.
/// D1: θ is the complete quantifier-free diagram of A; every tuple b with θ(b)
///     is an isomorphic copy of A, and the check replays consistency of each
///     diagram conjunction ζ(a,x) in every relabelled copy.
/// D2: each consistent ζ(a,x) (it suffices to take diagram conjunctions) is
///     consistent over every model B ⊇ A with |B| <= |A| + d2_slack, up to
///     that bound only.
/// D3: every non-least 1-variable diagram is maximal; a failure records the
///     chain least ⊂ D ⊂ E (or D ⊂ E when there is no least diagram).
/// Principality holds for every type in this backend and is not audited.
struct AuditReport {
  std::string theory;
  std::size_t bound = 0;
  std::size_t d2_slack = 0;
  std::size_t contexts = 0;
  AxiomVerdict d0, d1, d2, d3;
  bool all_pass() const { return d0.pass && d1.pass && d2.pass && d3.pass; }
};

AuditReport audit(const dsl::TheorySpec& theory, const AuditOptions& opts = {});

/// The complete quantifier-free diagram of A in variables z1..zn (variable i
/// standing for element i): all atoms and negated atoms, equalities
/// included.
logic::Formula complete_diagram(const semantics::FiniteStructure& a);

}  // namespace ktypes::types
