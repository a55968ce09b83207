#include "ktypes/types/probe.hpp"

#include "ktypes/error.hpp"
#include "ktypes/semantics/enumerate.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::types {

ProbeReport solution_count_probe(const semantics::Context& ctx, const logic::EqFormula& phi, std::size_t max_size) {
  if (ctx.vars() != 1) throw Error(Errc::InvalidArgument, "the probe takes a formula in one variable");
  const BitVec sat = ctx.satisfying(phi.formula());
  if (sat.none()) throw Error(Errc::InconsistentFormula, "formula is inconsistent over A");
  if (sat.count() == ctx.size()) throw Error(Errc::TrivialFormula, "formula is entailed over A");
  if (max_size > ctx.options().max_elements)
    throw Error(Errc::LimitExceeded, "probe size " + std::to_string(max_size) + " exceeds the element cap");

  ProbeReport out;
  for (std::size_t s = ctx.params().size(); s <= max_size; ++s) {
    ProbeRow row{s, 0, 0};
    for (const auto& b : semantics::extensions(ctx.theory(), ctx.params(), s, ctx.options().search)) {
      ++row.models;
      std::size_t count = 0;
      for (int e = 0; e < static_cast<int>(b.size()); ++e)
        if (semantics::holds_in(b, phi.formula(), std::span<const int>(&e, 1))) ++count;
      row.max_solutions = std::max(row.max_solutions, count);
    }
    out.rows.push_back(row);
  }
  const auto k = out.rows.size();
  out.growth_at_bound = k >= 2 && out.rows[k - 1].max_solutions > out.rows[k - 2].max_solutions;
  return out;
}

}  // namespace ktypes::types
