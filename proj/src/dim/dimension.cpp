#include "ktypes/dim/dimension.hpp"

#include <algorithm>

#include "ktypes/semantics/enumerate.hpp"

namespace ktypes::dim {

using semantics::Context;
using types::EqType;
using types::VarMask;

namespace {

// transcendental_on for every variable subset, indexed by mask.
std::vector<BitVec> trans_table(const Context& ctx) {
  std::vector<BitVec> t;
  for (VarMask m = 0; m < (VarMask{1} << ctx.vars()); ++m) t.push_back(types::transcendental_on(ctx, m));
  return t;
}

// Subsets of {0..n-1} of size k, as ascending index lists in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

VarMask mask_of(std::span<const int> vars) {
  VarMask m = 0;
  for (int v : vars) m |= VarMask{1} << v;
  return m;
}

AlgDim odim_of(const Context& ctx, const BitVec& sat, const std::vector<BitVec>& trans) {
  for (int k = ctx.vars(); k >= 0; --k)
    for (const auto& idx : combinations(ctx.vars(), k))
      if ((trans[mask_of(idx)] & sat).any()) return {static_cast<std::size_t>(k), idx};
  return {};
}

KrullDim kdim_of(const Context& ctx, const BitVec& sat) {
  // Diagrams are listed with fewer atoms first, so proper subsets come earlier.
  std::vector<std::size_t> down(ctx.size(), 0);
  const auto members = sat.ones();
  std::size_t best = 0;
  for (auto i : members) {
    for (auto j : (ctx.below(i) & sat).ones())
      if (j != i) down[i] = std::max(down[i], down[j] + 1);
    best = std::max(best, down[i]);
  }
  KrullDim k{best, {}};
  std::optional<std::size_t> prev;
  for (std::size_t need = best + 1; need-- > 0;) {
    BitVec pool = prev ? ctx.below(*prev) & sat : sat;
    for (auto i : pool.ones()) {
      if (prev && i == *prev) continue;
      if (down[i] == need) {
        k.chain.push_back(i);
        prev = i;
        break;
      }
    }
  }
  return k;
}

bool non_trivial(const Context& ctx, const BitVec& s) { return s.count() != ctx.size(); }

std::string describe(const Context& ctx, const BitVec& s) { return ctx.render(types::upset_formula(ctx, s).formula()); }

Check named(std::string name, std::size_t instances = 0) {
  Check c;
  c.name = std::move(name);
  c.instances = instances;
  return c;
}

void fail(Check& c, std::string detail) {
  ++c.failures;
  if (c.details.size() < 16) c.details.push_back(std::move(detail));
}

}  // namespace

KrullDim krull_dim(const EqType& p) {
  if (p.sat().none()) throw Error(Errc::InconsistentType, "Krull dimension of an inconsistent type");
  return kdim_of(p.context(), p.sat());
}

AlgDim alg_dim(const EqType& p) {
  if (p.sat().none()) throw Error(Errc::InconsistentType, "algebraic dimension of an inconsistent type");
  return odim_of(p.context(), p.sat(), trans_table(p.context()));
}

std::vector<logic::EqFormula> lksihn_decompose(const EqType& p, std::span<const int> indep) {
  const Context& ctx = p.context();
  const auto c = types::classify(p);
  if (!c.consistent) throw Error(Errc::InconsistentType, "decomposition of an inconsistent type");
  if (c.trivial) throw Error(Errc::TrivialType, "decomposition of the trivial type");
  for (int v : indep)
    if (v < 0 || v >= ctx.vars()) throw Error(Errc::BadIndexSet, "index set mentions a variable outside the type");
  const VarMask m = mask_of(indep);
  if (static_cast<std::size_t>(__builtin_popcountll(m)) != indep.size())
    throw Error(Errc::BadIndexSet, "index set repeats a variable");
  const AlgDim o = alg_dim(p);
  if (indep.size() != o.odim)
    throw Error(Errc::BadIndexSet, "index set has " + std::to_string(indep.size()) + " variables, algebraic dimension is " +
                                       std::to_string(o.odim));
  const BitVec pool = types::transcendental_on(ctx, m) & p.sat();
  if (pool.none()) throw Error(Errc::BadIndexSet, "o(z_I/A) is inconsistent with the type");
  std::vector<logic::EqFormula> out;
  for (auto d : ctx.minimal(pool)) out.push_back(ctx.conjunction(ctx.diagrams()[d].atoms));
  return out;
}

bool locally_krull_minimal_here(const Context& ctx) {
  auto opts = ctx.options();
  opts.var_names.clear();
  for (int v = 1; v <= ctx.vars(); ++v) {
    const Context c(ctx.theory(), ctx.params(), v, opts);
    if (!c.least()) return false;
    if (v == 1)
      for (std::size_t d = 0; d < c.size(); ++d)
        if (c.least() != d && c.above(d).count() > 1) return false;
  }
  return true;
}

Check verify_decrease(const Context& ctx, std::size_t lattice_cap) {
  Check c = named("decrease");
  const auto lattice = types::enumerate_lattice(ctx, lattice_cap);
  c.complete = lattice.complete;
  c.hypothesis_met = locally_krull_minimal_here(ctx);
  const auto trans = trans_table(ctx);
  std::vector<std::size_t> odims;
  for (const auto& q : lattice.upsets) odims.push_back(q.any() ? odim_of(ctx, q, trans).odim : 0);
  for (std::size_t d = 0; d < ctx.size(); ++d) {
    const BitVec& p = ctx.above(d);
    if (!non_trivial(ctx, p)) continue;
    const std::size_t op = odim_of(ctx, p, trans).odim;
    for (std::size_t k = 0; k < lattice.upsets.size(); ++k) {
      const BitVec& q = lattice.upsets[k];
      if (q.none() || !non_trivial(ctx, q) || !q.is_strict_subset_of(p)) continue;
      ++c.instances;
      if (odims[k] >= op)
        fail(c, "q = " + describe(ctx, q) + " has o-dim " + std::to_string(odims[k]) + ", prime p = " +
                    describe(ctx, p) + " has " + std::to_string(op));
    }
  }
  return c;
}

Check verify_k_le_o(const Context& ctx, std::size_t lattice_cap) {
  Check c = named("k_le_o");
  const auto lattice = types::enumerate_lattice(ctx, lattice_cap);
  c.complete = lattice.complete;
  c.hypothesis_met = locally_krull_minimal_here(ctx);
  const auto trans = trans_table(ctx);
  for (const auto& q : lattice.upsets) {
    if (q.none()) continue;
    ++c.instances;
    const auto k = kdim_of(ctx, q).kdim;
    const auto o = odim_of(ctx, q, trans).odim;
    if (k > o || o > static_cast<std::size_t>(ctx.vars()))
      fail(c, describe(ctx, q) + ": kdim " + std::to_string(k) + ", odim " + std::to_string(o));
  }
  return c;
}

Check verify_kdim_zero(const Context& ctx) {
  Check c = named("kdim_zero_iff_maximal");
  for (std::size_t d = 0; d < ctx.size(); ++d) {
    ++c.instances;
    const BitVec& p = ctx.above(d);
    if ((kdim_of(ctx, p).kdim == 0) != (p.count() == 1)) fail(c, describe(ctx, p));
  }
  return c;
}

Check verify_maxdim(const Context& ctx, std::size_t lattice_cap) {
  Check c = named("maxdim");
  const auto lattice = types::enumerate_lattice(ctx, lattice_cap);
  c.complete = lattice.complete;
  const auto trans = trans_table(ctx);
  for (const auto& q : lattice.upsets) {
    if (q.none()) continue;
    ++c.instances;
    std::size_t best = 0;
    for (auto d : ctx.minimal(q)) best = std::max(best, odim_of(ctx, ctx.above(d), trans).odim);
    const auto o = odim_of(ctx, q, trans).odim;
    if (o != best) fail(c, describe(ctx, q) + ": odim " + std::to_string(o) + ", components reach " + std::to_string(best));
  }
  return c;
}

Check verify_odim_zero(const Context& ctx, std::size_t lattice_cap) {
  Check c = named("odim_zero");
  if (ctx.params().size() == 0) return c;
  const auto lattice = types::enumerate_lattice(ctx, lattice_cap);
  c.complete = lattice.complete;
  const auto trans = trans_table(ctx);
  for (const auto& q : lattice.upsets) {
    if (q.none() || !non_trivial(ctx, q)) continue;
    ++c.instances;
    const bool zero = odim_of(ctx, q, trans).odim == 0;
    bool all_maximal = true;
    for (auto d : q.ones()) all_maximal = all_maximal && ctx.above(d).count() == 1;
    if (zero != all_maximal)
      fail(c, describe(ctx, q) + (zero ? ": odim 0 but not a disjunction of maximals"
                                       : ": disjunction of maximals with positive odim"));
  }
  return c;
}

Check verify_dp(const Context& ctx) {
  Check c = named("dp");
  auto opts = ctx.options();
  opts.var_names.clear();
  for (int v = 1; v <= ctx.vars(); ++v) {
    ++c.instances;
    if (!Context(ctx.theory(), ctx.params(), v, opts).least())
      fail(c, "(a) o(z/A) inconsistent for " + std::to_string(v) + " variables");
  }
  if (ctx.params().size() + 1 + static_cast<std::size_t>(ctx.vars()) <= opts.max_elements) {
    const auto mins = ctx.minimal(ctx.all());
    for (const auto& b : semantics::extensions(ctx.theory(), ctx.params(), ctx.params().size() + 1, opts.search)) {
      Context cb(ctx.theory(), b, ctx.vars(), ctx.options());
      for (auto d : mins) {
        ++c.instances;
        const auto xi = types::upset_formula(ctx, ctx.below(d).complement());
        if (cb.satisfying(xi.formula()).count() == cb.size())
          fail(c, "(b) " + ctx.render(xi.formula()) + " becomes entailed over a one-element extension");
      }
    }
  } else {
    c.complete = false;
  }
  if (ctx.params().size() > 0 || ctx.vars() > 1) {
    ++c.instances;
    if (ctx.size() <= 1) fail(c, "(c) o(z/A) is trivial");
  }
  return c;
}

KeqoReport check_keqo(const Context& ctx, std::size_t param_bound, std::size_t lattice_cap) {
  KeqoReport r;
  r.param_bound = param_bound;
  for (std::size_t s = ctx.params().size(); s <= param_bound && r.hypothesis_holds; ++s) {
    for (const auto& b : semantics::extensions(ctx.theory(), ctx.params(), s, ctx.options().search)) {
      ++r.parameter_sets;
      for (int zlen = 0; zlen < ctx.vars() && r.hypothesis_holds; ++zlen) {
        auto opts = ctx.options();
        opts.var_names.clear();
        for (int i = 0; i < zlen; ++i) opts.var_names.push_back("z" + std::to_string(i + 1));
        opts.var_names.push_back("x");
        Context cb(ctx.theory(), b, zlen + 1, opts);
        const BitVec tx = types::transcendental_on(cb, VarMask{1} << zlen);
        for (std::size_t d = 0; d < cb.size(); ++d) {
          if (!cb.above(d).is_subset_of(tx)) continue;
          r.hypothesis_holds = false;
          r.witness_params = b;
          r.witness_vars = zlen + 1;
          r.witness_formula = cb.render(cb.conjunction(cb.diagrams()[d].atoms).formula());
          break;
        }
      }
      if (!r.hypothesis_holds) break;
    }
  }
  r.equality = named("k_eq_o");
  const auto lattice = types::enumerate_lattice(ctx, lattice_cap);
  r.equality.complete = lattice.complete;
  r.equality.hypothesis_met = r.hypothesis_holds;
  const auto trans = trans_table(ctx);
  for (const auto& q : lattice.upsets) {
    if (q.none()) continue;
    ++r.equality.instances;
    const auto k = kdim_of(ctx, q).kdim;
    const auto o = odim_of(ctx, q, trans).odim;
    if (k != o) fail(r.equality, describe(ctx, q) + ": kdim " + std::to_string(k) + " < odim " + std::to_string(o));
  }
  r.equality_asserted = r.hypothesis_holds;
  return r;
}

DimReport dim_report(const EqType& p) {
  const Context& ctx = p.context();
  DimReport r;
  r.type = ctx.render(p.canonical().formula());
  r.k = krull_dim(p);
  r.o = alg_dim(p);

  Check chain = named("kchain_replay", 1);
  bool ok = r.k.chain.size() == r.k.kdim + 1;
  for (std::size_t i = 0; ok && i + 1 < r.k.chain.size(); ++i) {
    const auto& hi = ctx.diagrams()[r.k.chain[i]].atoms;
    const auto& lo = ctx.diagrams()[r.k.chain[i + 1]].atoms;
    // p_i ⊢ p_{i+1} and not conversely.
    ok = lo.is_strict_subset_of(hi) && semantics::entails(ctx, std::vector{ctx.conjunction(hi).formula()}, ctx.conjunction(lo)) &&
         !semantics::entails(ctx, std::vector{ctx.conjunction(lo).formula()}, ctx.conjunction(hi));
  }
  if (ok && !r.k.chain.empty()) {
    std::vector<logic::Formula> gens;
    for (const auto& g : p.generators()) gens.push_back(g.formula());
    const auto last = ctx.conjunction(ctx.diagrams()[r.k.chain.back()].atoms);
    for (const auto& g : gens) ok = ok && semantics::entails(ctx, std::vector{last.formula()}, g);
  }
  if (!ok) fail(chain, "chain does not replay");
  r.checks.push_back(chain);

  Check oset = named("oset_replay", 1);
  if (r.o.oset.size() != r.o.odim || (types::transcendental_on(ctx, mask_of(r.o.oset)) & p.sat()).none())
    fail(oset, "o(z_I/A) ∧ p is inconsistent");
  r.checks.push_back(oset);

  Check klo = named("k_le_o", 1);
  if (r.k.kdim > r.o.odim || r.o.odim > static_cast<std::size_t>(ctx.vars())) fail(klo, "kdim exceeds odim");
  r.checks.push_back(klo);

  const auto cls = types::classify(p);
  if (cls.prime) {
    Check kz = named("kdim_zero_iff_maximal", 1);
    if ((r.k.kdim == 0) != cls.maximal) fail(kz, "kdim 0 disagrees with maximality");
    r.checks.push_back(kz);
  }
  return r;
}

}  // namespace ktypes::dim
