#include "ktypes/semantics/context.hpp"

#include <algorithm>
#include <map>

#include "ktypes/dsl/render.hpp"
#include "ktypes/error.hpp"
#include "ktypes/logic/valuation.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::semantics {

using logic::Atom;
using logic::Formula;

Context::Context(dsl::TheorySpec theory, FiniteStructure params, int vars, const ContextOptions& opts)
    : theory_(std::move(theory)), params_(std::move(params)), vars_(vars), opts_(opts) {
  if (vars_ < 0) throw Error(Errc::InvalidArgument, "negative variable count");
  if (params_.size() + static_cast<std::size_t>(vars_) > opts_.max_elements)
    throw Error(Errc::LimitExceeded, "context needs " + std::to_string(params_.size() + vars_) +
                                         " elements, cap is " + std::to_string(opts_.max_elements));
  if (!is_model(params_, theory_))
    throw Error(Errc::NotAModel, "parameter structure is not a model of " + theory_.name);
  var_names_ = opts_.var_names.empty() ? dsl::default_var_names(vars_) : opts_.var_names;
  if (var_names_.size() != static_cast<std::size_t>(vars_))
    throw Error(Errc::InvalidArgument, "variable name list does not match the variable count");
  for (auto& a : logic::atom_universe(theory_.signature, vars_, params_.names()))
    if (a.mentions_var()) universe_.push_back(std::move(a));
  for (std::size_t i = 0; i < universe_.size(); ++i) atom_pos_.emplace(universe_[i], i);
  enumerate();
}

std::optional<std::size_t> Context::atom_index(const Atom& a) const {
  auto it = atom_pos_.find(a);
  if (it == atom_pos_.end()) return std::nullopt;
  return it->second;
}

void Context::enumerate() {
  const std::size_t na = params_.size();
  const auto& sig = theory_.signature;
  std::map<BitVec, Diagram> found;

  // image[i] < na: variable i is the parameter image[i]; otherwise it is new
  // element image[i] (new elements numbered in order of first use).
  std::vector<int> image(static_cast<std::size_t>(vars_), 0);

  auto process = [&](std::size_t fresh) {
    std::vector<std::string> names = params_.names();
    for (std::size_t k = 0; k < fresh; ++k) names.push_back("#" + std::to_string(k + 1));
    FiniteStructure base(sig, names);
    for (std::size_t r = 0; r < sig.size(); ++r)
      for (const auto& t : params_.tuples(r)) base.set(r, t);
    CompletionProblem problem = CompletionProblem::with_fixed_prefix(theory_, base, na);
    if (problem.infeasible()) return;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> free_pos;
    for (std::size_t j = 0; j < problem.free_count(); ++j)
      free_pos[{problem.free_tuples()[j].relation, problem.free_tuples()[j].index}] = j;

    // Each universe atom is either constant under this pattern or one free bit.
    struct Source {
      bool constant;
      bool value;
      std::size_t bit;
    };
    std::vector<Source> sources;
    for (const auto& a : universe_) {
      std::vector<int> ids;
      for (const auto& s : a.args())
        ids.push_back(s.is_var() ? image[static_cast<std::size_t>(s.var_index())] : *base.element(s.param_name()));
      if (a.is_equality()) {
        sources.push_back({true, ids[0] == ids[1], 0});
        continue;
      }
      const std::size_t r = *sig.find(a.relation_name());
      const std::size_t idx = base.tuple_index(ids);
      auto it = free_pos.find({r, idx});
      if (it == free_pos.end())
        sources.push_back({true, base.holds_index(r, idx), 0});
      else
        sources.push_back({false, false, it->second});
    }

    for (const auto& completion : enumerate_completions(problem, opts_.search)) {
      BitVec d(universe_.size());
      for (std::size_t u = 0; u < sources.size(); ++u)
        d.set(u, sources[u].constant ? sources[u].value : completion.test(sources[u].bit));
      if (found.count(d)) continue;
      found.emplace(d, Diagram{d, problem.materialize(completion), image});
    }
  };

  auto rec = [&](auto&& self, std::size_t i, std::size_t fresh) -> void {
    if (i == image.size()) {
      process(fresh);
      return;
    }
    for (std::size_t e = 0; e < na + fresh + 1; ++e) {
      image[i] = static_cast<int>(e);
      self(self, i + 1, e == na + fresh ? fresh + 1 : fresh);
    }
  };
  rec(rec, 0, 0);

  for (auto& [key, d] : found) diagrams_.push_back(std::move(d));
  const std::size_t n = diagrams_.size();
  above_.assign(n, BitVec(n));
  below_.assign(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (diagrams_[i].atoms.is_subset_of(diagrams_[j].atoms)) {
        above_[i].set(j);
        below_[j].set(i);
      }
  entailed_ = BitVec(universe_.size());
  entailed_.set_all();
  for (const auto& d : diagrams_) entailed_ &= d.atoms;
  least_ = find_diagram(entailed_);
}

std::optional<std::size_t> Context::find_diagram(const BitVec& atoms) const {
  auto it = std::lower_bound(diagrams_.begin(), diagrams_.end(), atoms,
                             [](const Diagram& d, const BitVec& b) { return d.atoms < b; });
  if (it == diagrams_.end() || it->atoms != atoms) return std::nullopt;
  return static_cast<std::size_t>(it - diagrams_.begin());
}

BitVec Context::all() const {
  BitVec b(diagrams_.size());
  b.set_all();
  return b;
}

bool Context::eval_atom(const Atom& a, std::size_t i) const {
  if (a.mentions_var()) {
    auto idx = atom_index(a);
    if (!idx) throw Error(Errc::UnknownAtom, "atom " + dsl::render_atom(a, var_names_) + " is outside the context");
    return diagrams_[i].atoms.test(*idx);
  }
  std::vector<int> ids;
  for (const auto& s : a.args()) {
    auto e = params_.element(s.param_name());
    if (!e) throw Error(Errc::UnknownAtom, "unknown parameter '" + s.param_name() + "'");
    ids.push_back(*e);
  }
  if (a.is_equality()) return ids[0] == ids[1];
  auto r = theory_.signature.find(a.relation_name());
  if (!r || theory_.signature.relations()[*r].arity != static_cast<int>(ids.size()))
    throw Error(Errc::UnknownAtom, "atom " + dsl::render_atom(a, var_names_) + " is outside the signature");
  return params_.holds(*r, ids);
}

bool Context::eval(const Formula& f, std::size_t i) const {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Top: return true;
    case K::Bot: return false;
    case K::Atom: return eval_atom(f.atom(), i);
    case K::Not: return !eval(f.children().front(), i);
    case K::And:
      for (const auto& k : f.children())
        if (!eval(k, i)) return false;
      return true;
    case K::Or:
      for (const auto& k : f.children())
        if (eval(k, i)) return true;
      return false;
  }
  return false;
}

BitVec Context::satisfying(const Formula& f) const {
  BitVec out(diagrams_.size());
  for (std::size_t i = 0; i < diagrams_.size(); ++i) out.set(i, eval(f, i));
  return out;
}

BitVec Context::satisfying(std::span<const Formula> fs) const {
  BitVec out = all();
  for (const auto& f : fs) out &= satisfying(f);
  return out;
}

std::vector<Atom> Context::atoms_of(const BitVec& atoms) const {
  std::vector<Atom> out;
  for (auto i : atoms.ones()) out.push_back(universe_[i]);
  return out;
}

logic::EqFormula Context::conjunction(const BitVec& atoms) const {
  std::vector<Formula> parts;
  for (auto i : atoms.ones()) parts.push_back(Formula::atom(universe_[i]));
  return logic::EqFormula(Formula::conj(std::move(parts)));
}

std::vector<std::string> Context::render_atom_list(const BitVec& atoms) const {
  std::vector<std::string> out;
  for (auto i : atoms.ones()) out.push_back(dsl::render_atom(universe_[i], var_names_));
  return out;
}

std::string Context::render_atoms(const BitVec& atoms) const {
  std::string out = "{";
  bool first = true;
  for (const auto& s : render_atom_list(atoms)) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

std::string Context::render(const Formula& f) const { return dsl::render(f, var_names_); }

BitVec Context::diagram_of(const FiniteStructure& s, std::span<const int> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(vars_))
    throw Error(Errc::InvalidArgument, "tuple length differs from the variable count");
  if (!s.contains_induced(params_))
    throw Error(Errc::NotASubstructure, "parameter structure is not an induced substructure");
  for (int e : tuple)
    if (e < 0 || static_cast<std::size_t>(e) >= s.size()) throw Error(Errc::InvalidArgument, "tuple element out of range");
  BitVec out(universe_.size());
  for (std::size_t u = 0; u < universe_.size(); ++u) out.set(u, holds_in(s, Formula::atom(universe_[u]), tuple));
  return out;
}

BitVec Context::up_closure(const BitVec& diagrams) const {
  BitVec out(diagrams_.size());
  for (auto i : diagrams.ones()) out |= above_[i];
  return out;
}

std::vector<std::size_t> Context::minimal(const BitVec& diagrams) const {
  std::vector<std::size_t> out;
  for (auto i : diagrams.ones())
    if ((below_[i] & diagrams).count() == 1) out.push_back(i);
  return out;
}

ContextPtr make_context(const dsl::TheorySpec& theory, const FiniteStructure& params, int vars,
                        const ContextOptions& opts) {
  return std::make_shared<const Context>(theory, params, vars, opts);
}

std::vector<Diagram> realizable_diagrams(const dsl::TheorySpec& theory, const FiniteStructure& params,
                                         int vars, const ContextOptions& opts) {
  return Context(theory, params, vars, opts).diagrams();
}

bool entails(const Context& ctx, std::span<const Formula> premises, const Formula& conclusion) {
  const BitVec sat = ctx.satisfying(premises);
  for (auto i : sat.ones())
    if (!ctx.eval(conclusion, i)) return false;
  return true;
}

bool entails(const dsl::TheorySpec& theory, const FiniteStructure& params, std::span<const Formula> premises,
             const Formula& conclusion, int vars, const ContextOptions& opts) {
  return entails(Context(theory, params, vars, opts), premises, conclusion);
}

bool consistent(const Context& ctx, std::span<const Formula> p) { return ctx.satisfying(p).any(); }

bool consistent(const dsl::TheorySpec& theory, const FiniteStructure& params, std::span<const Formula> p,
                int vars, const ContextOptions& opts) {
  return consistent(Context(theory, params, vars, opts), p);
}

}  // namespace ktypes::semantics
