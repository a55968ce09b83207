#pragma once

#include <utility>
#include <vector>

#include "ktypes/logic/formula.hpp"
#include "ktypes/semantics/context.hpp"

namespace ktypes::types {

struct ProbeRow {
  std::size_t size = 0;
  std::size_t max_solutions = 0;
  std::size_t models = 0;  // isomorphism classes over A inspected
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  /// The maximum was still increasing at the largest size.
  bool growth_at_bound = false;
};

/// For each size s from |A| to max_size, the largest number of elements
/// satisfying φ(x) in a model B ⊇ A of size s. A bounded table is consistent
/// with, but never proves, a uniform bound on solution sets; a table still
/// growing at the bound is evidence against one. Throws TrivialFormula and
/// InconsistentFormula (judged in the 1-variable context over A) and
/// LimitExceeded beyond the context's element cap.
ProbeReport solution_count_probe(const semantics::Context& ctx, const logic::EqFormula& phi,
                                 std::size_t max_size);

}  // namespace ktypes::types
