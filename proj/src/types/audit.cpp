#include "ktypes/types/audit.hpp"

#include <algorithm>
#include <numeric>

#include "ktypes/dsl/render.hpp"
#include "ktypes/logic/valuation.hpp"
#include "ktypes/semantics/enumerate.hpp"
#include "ktypes/semantics/model.hpp"
#include "ktypes/types/eq_type.hpp"

namespace ktypes::types {

using logic::Formula;
using semantics::Context;
using semantics::FiniteStructure;

logic::Formula complete_diagram(const FiniteStructure& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Formula> parts;
  for (const auto& atom : logic::atom_universe(a.signature(), n, {})) {
    std::vector<int> ids;
    for (const auto& s : atom.args()) ids.push_back(s.var_index());
    const bool holds = atom.is_equality() ? ids[0] == ids[1]
                                          : a.holds(*a.signature().find(atom.relation_name()), ids);
    Formula f = Formula::atom(atom);
    parts.push_back(holds ? f : Formula::negate(f));
  }
  return Formula::conj(std::move(parts));
}

namespace {

std::vector<std::vector<std::string>> render_diagrams(const Context& ctx, const std::vector<std::size_t>& ids) {
  std::vector<std::vector<std::string>> out;
  for (auto i : ids) out.push_back(ctx.render_atom_list(ctx.diagrams()[i].atoms));
  return out;
}

void check_d0(const Context& ctx, AxiomVerdict& v) {
  ++v.instances;
  if (ctx.least()) return;
  v.pass = false;
  const BitVec everything = ctx.all();
  const auto mins = ctx.minimal(everything);
  AuditWitness w{ctx.params(), ctx.vars(), ctx.render(upset_formula(ctx, everything).formula()),
                 render_diagrams(ctx, mins), std::nullopt,
                 "the disjunction is entailed over A and none of its disjuncts is"};
  v.witnesses.push_back(std::move(w));
}

void check_d1(const Context& ctx, AxiomVerdict& v) {
  const FiniteStructure& a = ctx.params();
  const std::size_t n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool ok = true;
  do {
    // b = π(a): the copy of A in which element i is called by the name of π(i).
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = a.names()[static_cast<std::size_t>(perm[i])];
    FiniteStructure b(a.signature(), names);
    for (std::size_t r = 0; r < a.signature().size(); ++r)
      for (const auto& t : a.tuples(r)) b.set(r, t);
    Context cb(ctx.theory(), b, ctx.vars(), ctx.options());
    for (std::size_t d = 0; d < ctx.size() && ok; ++d) {
      ++v.instances;
      // Renaming parameters: same atoms, names taken from b.
      Formula zeta = ctx.conjunction(ctx.diagrams()[d].atoms).formula();
      std::vector<Formula> parts;
      for (const auto& atom : ctx.atoms_of(ctx.diagrams()[d].atoms)) {
        std::vector<logic::Slot> args;
        for (const auto& s : atom.args()) {
          if (s.is_var()) {
            args.push_back(s);
          } else {
            const auto e = static_cast<std::size_t>(*a.element(s.param_name()));
            args.push_back(logic::Slot::param(names[e]));
          }
        }
        parts.push_back(atom.is_equality() ? Formula::equals(args[0], args[1])
                                           : Formula::atom(logic::Atom::relation(atom.relation_name(), args)));
      }
      if (cb.satisfying(Formula::conj(std::move(parts))).none()) {
        ok = false;
        v.pass = false;
        v.witnesses.push_back({a, ctx.vars(), ctx.render(zeta), {}, b,
                               "consistency is lost in an isomorphic copy of A"});
      }
    }
  } while (ok && std::next_permutation(perm.begin(), perm.end()));
  if (ok) {
    std::vector<std::string> z;
    for (std::size_t i = 0; i < n; ++i) z.push_back("z" + std::to_string(i + 1));
    v.witnesses.push_back({a, ctx.vars(), dsl::render(complete_diagram(a), z), {}, std::nullopt,
                           "theta: complete diagram of A"});
  }
}

void check_d2(const Context& ctx, std::size_t slack, AxiomVerdict& v) {
  const FiniteStructure& a = ctx.params();
  for (std::size_t size = a.size() + 1; size <= a.size() + slack; ++size) {
    for (const auto& b : semantics::extensions(ctx.theory(), a, size, ctx.options().search)) {
      Context cb(ctx.theory(), b, ctx.vars(), ctx.options());
      for (std::size_t d = 0; d < ctx.size(); ++d) {
        ++v.instances;
        const Formula zeta = ctx.conjunction(ctx.diagrams()[d].atoms).formula();
        if (cb.satisfying(zeta).none()) {
          v.pass = false;
          v.witnesses.push_back({a, ctx.vars(), ctx.render(zeta), {}, b,
                                 "consistent over A, inconsistent over the extension"});
        }
      }
    }
  }
}

void check_d3(const Context& ctx, AxiomVerdict& v) {
  for (std::size_t d = 0; d < ctx.size(); ++d) {
    if (ctx.least() == d) continue;
    ++v.instances;
    const BitVec& up = ctx.above(d);
    if (up.count() == 1) continue;
    v.pass = false;
    std::size_t e = 0;
    for (auto j : up.ones())
      if (j != d) {
        e = j;
        break;
      }
    std::vector<std::size_t> chain;
    if (ctx.least()) chain.push_back(*ctx.least());
    chain.push_back(d);
    chain.push_back(e);
    v.witnesses.push_back({ctx.params(), ctx.vars(), ctx.render(ctx.conjunction(ctx.diagrams()[d].atoms).formula()),
                           render_diagrams(ctx, chain), std::nullopt,
                           "non-trivial prime type that is not maximal"});
  }
}

}  // namespace

AuditReport audit(const dsl::TheorySpec& theory, const AuditOptions& opts) {
  AuditReport r;
  r.theory = theory.name;
  r.bound = opts.max_param_size;
  r.d2_slack = opts.d2_slack;
  for (std::size_t n = 0; n <= opts.max_param_size; ++n) {
    for (const auto& a : semantics::models_up_to_iso(theory, n, opts.context.search)) {
      ++r.contexts;
      for (int vars = 1; vars <= opts.max_tuple_vars; ++vars) check_d0(Context(theory, a, vars, opts.context), r.d0);
      Context ctx(theory, a, 1, opts.context);
      check_d1(ctx, r.d1);
      check_d2(ctx, opts.d2_slack, r.d2);
      check_d3(ctx, r.d3);
    }
  }
  return r;
}

}  // namespace ktypes::types
