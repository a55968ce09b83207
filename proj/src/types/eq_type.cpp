#include "ktypes/types/eq_type.hpp"

#include <algorithm>
#include <set>

#include "ktypes/logic/normal_form.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::types {

using logic::EqFormula;
using logic::Formula;
using semantics::Context;
using semantics::ContextPtr;

EqType::EqType(ContextPtr ctx, std::vector<EqFormula> generators) : ctx_(std::move(ctx)) {
  sat_ = ctx_->all();
  for (auto& g : generators) {
    EqFormula n = logic::normal_form(g);
    sat_ &= ctx_->satisfying(n.formula());
    if (std::find(generators_.begin(), generators_.end(), n) == generators_.end())
      generators_.push_back(std::move(n));
  }
}

EqType EqType::from_upset(ContextPtr ctx, const BitVec& upset) {
  EqFormula f = upset_formula(*ctx, upset);
  return EqType(std::move(ctx), {std::move(f)});
}

EqType EqType::of_diagram(ContextPtr ctx, std::size_t i) {
  EqFormula f = ctx->conjunction(ctx->diagrams().at(i).atoms);
  return EqType(std::move(ctx), {std::move(f)});
}

EqType EqType::trivial(ContextPtr ctx) { return EqType(std::move(ctx), {}); }

EqFormula EqType::canonical() const { return upset_formula(*ctx_, sat_); }

bool EqType::entails(const Formula& f) const {
  for (auto i : sat_.ones())
    if (!ctx_->eval(f, i)) return false;
  return true;
}

EqFormula upset_formula(const Context& ctx, const BitVec& diagrams) {
  std::vector<Formula> parts;
  for (auto i : ctx.minimal(diagrams)) parts.push_back(ctx.conjunction(ctx.diagrams()[i].atoms).formula());
  return logic::normal_form(EqFormula(Formula::disj(std::move(parts))));
}

TypeClassification classify(const EqType& p) {
  TypeClassification c;
  const BitVec& s = p.sat();
  c.consistent = s.any();
  c.trivial = c.consistent && s.count() == p.context().size();
  c.prime = c.consistent && p.context().minimal(s).size() == 1;
  c.maximal = s.count() == 1;
  c.principal = true;
  c.isolating_formula = p.canonical();
  return c;
}

EqType eqn_tp(ContextPtr ctx, const semantics::FiniteStructure& s, std::span<const int> tuple) {
  if (!semantics::is_model(s, ctx->theory()))
    throw Error(Errc::NotAModel, "structure is not a model of " + ctx->theory().name);
  BitVec d = ctx->diagram_of(s, tuple);
  EqFormula f = ctx->conjunction(d);
  return EqType(std::move(ctx), {std::move(f)});
}

EqType circ_part(const EqType& p) {
  if (p.sat().none()) throw Error(Errc::InconsistentType, "p° of an inconsistent type");
  return EqType(p.context_ptr(), {p.canonical()});
}

std::vector<Formula> bullet_part(const EqType& p) {
  if (p.sat().none()) throw Error(Errc::InconsistentType, "p• of an inconsistent type");
  const Context& ctx = p.context();
  std::vector<Formula> out;
  for (auto d : ctx.minimal(p.sat())) {
    BitVec outside = ctx.below(d).complement();
    out.push_back(Formula::negate(upset_formula(ctx, outside).formula()));
  }
  return out;
}

bool bullet_contains(const EqType& p, const Formula& negated) {
  if (negated.kind() != Formula::Kind::Not) return false;
  const Formula& xi = negated.children().front();
  if (!xi.is_positive()) return false;
  return !p.entails(xi);
}

TranscendentalType transcendental_type(const Context& ctx) {
  TranscendentalType t;
  t.witness = ctx.least();
  t.consistent = t.witness.has_value();
  t.trivial = ctx.size() == 1;
  return t;
}

BitVec transcendental_on(const Context& ctx, VarMask vars) {
  BitVec over(ctx.universe().size());
  for (std::size_t u = 0; u < ctx.universe().size(); ++u)
    over.set(u, (ctx.universe()[u].var_mask() & ~vars) == 0);
  const BitVec allowed = ctx.entailed_atoms() | over.complement();
  BitVec out(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) out.set(i, ctx.diagrams()[i].atoms.is_subset_of(allowed));
  return out;
}

std::vector<EqType> prime_decomposition(const EqType& q) {
  std::vector<EqType> out;
  for (auto d : q.context().minimal(q.sat())) out.push_back(EqType::of_diagram(q.context_ptr(), d));
  return out;
}

std::vector<EqFormula> maximal_decomposition(const EqType& p) {
  const Context& ctx = p.context();
  const auto c = classify(p);
  if (!c.consistent) throw Error(Errc::InconsistentType, "maximal decomposition of an inconsistent type");
  if (c.trivial) throw Error(Errc::TrivialType, "maximal decomposition of the trivial type");
  std::vector<EqFormula> out;
  for (auto d : ctx.minimal(p.sat())) {
    const BitVec& up = ctx.above(d);
    if (up.count() > 1) {
      std::size_t e = 0;
      for (auto j : up.ones())
        if (j != d) {
          e = j;
          break;
        }
      throw NotKrullMinimalError("prime component " + ctx.render_atoms(ctx.diagrams()[d].atoms) +
                                     " is neither trivial nor maximal: it lies below " +
                                     ctx.render_atoms(ctx.diagrams()[e].atoms),
                                 {d, e});
    }
    out.push_back(ctx.conjunction(ctx.diagrams()[d].atoms));
  }
  return out;
}

EqType project_type(const EqType& p, std::span<const int> keep) {
  const Context& ctx = p.context();
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  VarMask mask = 0;
  for (int v : kept) {
    if (v < 0 || v >= ctx.vars()) throw Error(Errc::InvalidArgument, "projection onto a variable outside the type");
    mask |= VarMask{1} << v;
  }
  semantics::ContextOptions opts = ctx.options();
  opts.var_names.clear();
  for (int v : kept) opts.var_names.push_back(ctx.var_names()[static_cast<std::size_t>(v)]);
  auto sub = semantics::make_context(ctx.theory(), ctx.params(), static_cast<int>(kept.size()), opts);

  // Variable v of the outer context becomes variable position(v) of `sub`.
  std::vector<logic::Slot> rename;
  for (int v = 0; v < ctx.vars(); ++v) {
    auto it = std::find(kept.begin(), kept.end(), v);
    rename.push_back(logic::Slot::var(it == kept.end() ? -1 : static_cast<int>(it - kept.begin())));
  }
  BitVec projected(sub->size());
  for (auto i : p.sat().ones()) {
    BitVec d(sub->universe().size());
    for (auto u : ctx.diagrams()[i].atoms.ones()) {
      const auto& a = ctx.universe()[u];
      if ((a.var_mask() & ~mask) != 0) continue;
      Formula f = logic::substitute(Formula::atom(a), rename);
      if (f.kind() != Formula::Kind::Atom) continue;
      d.set(*sub->atom_index(f.atom()));
    }
    auto j = sub->find_diagram(d);
    if (!j) throw Error(Errc::InvalidArgument, "projection produced an unrealizable diagram");
    projected.set(*j);
  }
  return EqType::from_upset(sub, sub->up_closure(projected));
}

Lattice enumerate_lattice(const Context& ctx, std::size_t cap) {
  const std::size_t n = ctx.size();
  Lattice out;
  std::set<BitVec> seen;

  // Antichains, grown in index order; each determines one up-set.
  std::vector<std::size_t> chosen;
  bool overflow = false;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (overflow) return;
    BitVec gen(n);
    for (auto i : chosen) gen.set(i);
    seen.insert(ctx.up_closure(gen));
    if (seen.size() > cap) {
      overflow = true;
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      bool free = true;
      for (auto j : chosen)
        if (ctx.above(i).test(j) || ctx.below(i).test(j)) {
          free = false;
          break;
        }
      if (!free) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  if (overflow) {
    seen.clear();
    out.complete = false;
    seen.insert(BitVec(n));
    seen.insert(ctx.all());
    for (std::size_t i = 0; i < n; ++i) {
      seen.insert(ctx.above(i));
      for (std::size_t j = i + 1; j < n; ++j) seen.insert(ctx.above(i) | ctx.above(j));
    }
  }
  out.upsets.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace ktypes::types
