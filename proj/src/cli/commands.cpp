#include "commands.hpp"

#include "ktypes/cli/cli.hpp"
#include "ktypes/dim/dimension.hpp"
#include "ktypes/dsl/parser.hpp"
#include "ktypes/error.hpp"
#include "ktypes/types/amalgam.hpp"
#include "ktypes/types/audit.hpp"
#include "ktypes/types/eq_type.hpp"
#include "ktypes/types/probe.hpp"
#include "output.hpp"

namespace ktypes::cli {

using semantics::Context;
using semantics::ContextPtr;
using types::EqType;

namespace {

struct Loaded {
  ContextPtr ctx;
  EqType type;
};

ContextPtr build_context(const ContextArgs& a) {
  if (a.vars < 1) throw Error(Errc::InvalidArgument, "--vars must be at least 1");
  const dsl::TheorySpec theory = load_theory(a.theory);
  const semantics::FiniteStructure params = load_structure(a.params, theory.signature);
  return semantics::make_context(theory, params, a.vars, context_options());
}

Loaded load(const ContextArgs& a) {
  ContextPtr ctx = build_context(a);
  auto gens = dsl::parse_eq_type(a.type, ctx->theory().signature, ctx->var_names(), ctx->param_names());
  EqType p(ctx, std::move(gens));
  return {ctx, std::move(p)};
}

std::string render_type(const EqType& p) {
  std::vector<std::string> parts;
  for (const auto& g : p.generators()) parts.push_back(p.context().render(g.formula()));
  return parts.empty() ? "true" : join(parts, "; ");
}

Json diagram_list(const Context& ctx, const std::vector<std::size_t>& ids) {
  Json arr = Json::array();
  for (auto i : ids) arr.push_back(ctx.render_atom_list(ctx.diagrams()[i].atoms));
  return arr;
}

std::string diagram_text(const Context& ctx, std::size_t i) { return ctx.render_atoms(ctx.diagrams()[i].atoms); }

Json witness_json(const types::AuditWitness& w) {
  Json j;
  j["params"] = structure_json(w.params);
  j["vars"] = w.vars;
  j["formula"] = w.formula;
  j["diagrams"] = w.diagrams;
  if (w.extension) j["extension"] = structure_json(*w.extension);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

Json verdict_json(const types::AxiomVerdict& v) {
  Json j;
  j["verdict"] = pass_fail(v.pass);
  j["instances"] = v.instances;
  j["witnesses"] = Json::array();
  for (const auto& w : v.witnesses) j["witnesses"].push_back(witness_json(w));
  return j;
}

Json check_json(const dim::Check& c, bool full) {
  Json j;
  j["name"] = c.name;
  j["instances"] = c.instances;
  j["failures"] = c.failures;
  if (full) {
    j["complete"] = c.complete;
    j["hypothesis_met"] = c.hypothesis_met;
    j["details"] = c.details;
  }
  return j;
}

void print_checks(const std::vector<dim::Check>& checks, std::ostream& out) {
  Table t({"check", "verdict", "instances", "failures", "coverage"});
  for (const auto& c : checks)
    t.add({c.name, pass_fail(c.pass()), std::to_string(c.instances), std::to_string(c.failures),
           c.complete ? "full lattice" : "sampled lattice"});
  t.print(out);
  for (const auto& c : checks)
    for (const auto& d : c.details) out << c.name << " failure: " << d << '\n';
}

}  // namespace

int cmd_audit(const AuditArgs& a, bool json, std::ostream& out) {
  const dsl::TheorySpec theory = load_theory(a.theory);
  types::AuditOptions opts;
  opts.max_param_size = a.bound;
  opts.max_tuple_vars = a.tuple_vars;
  opts.d2_slack = a.d2_slack;
  opts.context = context_options();
  const types::AuditReport r = types::audit(theory, opts);

  if (json) {
    Json j;
    j["theory"] = r.theory;
    j["bound"] = r.bound;
    j["tuple_vars"] = a.tuple_vars;
    j["contexts"] = r.contexts;
    j["d0"] = verdict_json(r.d0);
    j["d1"] = verdict_json(r.d1);
    Json d2 = verdict_json(r.d2);
    d2["slack"] = r.d2_slack;
    d2["scope"] = "extensions B with |B| <= |A| + slack";
    j["d2"] = d2;
    Json d3 = verdict_json(r.d3);
    d3["chains"] = Json::array();
    for (const auto& w : r.d3.witnesses) d3["chains"].push_back(w.diagrams);
    j["d3"] = d3;
    j["principal"] = "every type is principal in the finite backend; not audited";
    j["verdict"] = pass_fail(r.all_pass());
    emit(out, j);
  } else {
    out << "theory " << r.theory << ": " << r.contexts << " parameter structures of size <= " << r.bound
        << " (up to isomorphism), tuples of 1.." << a.tuple_vars << " variables\n";
    Table t({"axiom", "verdict", "instances", "scope"});
    t.add({"D0", pass_fail(r.d0.pass), std::to_string(r.d0.instances), ""});
    t.add({"D1", pass_fail(r.d1.pass), std::to_string(r.d1.instances), ""});
    t.add({"D2", pass_fail(r.d2.pass), std::to_string(r.d2.instances),
           "|B| <= |A| + " + std::to_string(r.d2_slack) + ", up to bound"});
    t.add({"D3", pass_fail(r.d3.pass), std::to_string(r.d3.instances), ""});
    t.print(out);
    const std::pair<const char*, const types::AxiomVerdict*> all[] = {
        {"D0", &r.d0}, {"D1", &r.d1}, {"D2", &r.d2}, {"D3", &r.d3}};
    for (const auto& [name, v] : all) {
      if (v->pass) continue;
      for (const auto& w : v->witnesses) {
        out << name << " witness over A = " << structure_inline(w.params) << ", " << w.vars
            << (w.vars == 1 ? " variable" : " variables") << ":\n";
        if (!w.formula.empty()) out << "  formula: " << w.formula << '\n';
        for (const auto& d : w.diagrams) out << "  diagram: {" << join(d, ", ") << "}\n";
        if (w.extension) out << "  extension: " << structure_inline(*w.extension) << '\n';
        if (!w.note.empty()) out << "  " << w.note << '\n';
      }
    }
    out << "D0 " << pass_fail(r.d0.pass) << ", D1 " << pass_fail(r.d1.pass) << ", D2 " << pass_fail(r.d2.pass)
        << " (slack " << r.d2_slack << "), D3 " << pass_fail(r.d3.pass) << '\n';
  }
  return r.all_pass() ? kSuccess : kVerdictFail;
}

int cmd_primes(const ContextArgs& a, bool json, std::ostream& out) {
  const ContextPtr ctx = build_context(a);
  if (json) {
    Json j;
    j["context"] = context_json(*ctx);
    j["diagrams"] = Json::array();
    for (const auto& d : ctx->diagrams()) {
      Json e;
      e["atoms"] = ctx->render_atom_list(d.atoms);
      e["isolating_formula"] = ctx->render(ctx->conjunction(d.atoms).formula());
      j["diagrams"].push_back(e);
    }
    emit(out, j);
  } else {
    out << context_line(*ctx) << '\n';
    Table t({"#", "diagram", "isolating formula"});
    for (std::size_t i = 0; i < ctx->size(); ++i) {
      const auto& d = ctx->diagrams()[i];
      t.add({std::to_string(i), ctx->render_atoms(d.atoms), ctx->render(ctx->conjunction(d.atoms).formula())});
    }
    t.print(out);
    out << ctx->size() << " prime types\n";
  }
  return kSuccess;
}

int cmd_classify(const ContextArgs& a, bool json, std::ostream& out) {
  const Loaded l = load(a);
  const Context& ctx = *l.ctx;
  const types::TypeClassification c = types::classify(l.type);
  std::vector<std::size_t> sat;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (l.type.sat().test(i)) sat.push_back(i);
  const std::string iso = c.isolating_formula ? ctx.render(c.isolating_formula->formula()) : "";
  if (json) {
    Json j;
    j["context"] = context_json(ctx);
    j["type"] = render_type(l.type);
    j["trivial"] = c.trivial;
    j["consistent"] = c.consistent;
    j["prime"] = c.prime;
    j["maximal"] = c.maximal;
    j["principal"] = c.principal;
    j["isolating_formula"] = iso;
    j["satisfying_diagrams"] = diagram_list(ctx, sat);
    emit(out, j);
  } else {
    out << context_line(ctx) << '\n' << "type: " << render_type(l.type) << '\n';
    Table t({"property", "value"});
    t.add({"trivial", yes_no(c.trivial)});
    t.add({"consistent", yes_no(c.consistent)});
    t.add({"prime", yes_no(c.prime)});
    t.add({"maximal", yes_no(c.maximal)});
    t.add({"principal", yes_no(c.principal)});
    t.add({"isolating formula", iso});
    t.add({"satisfying diagrams", std::to_string(sat.size()) + " of " + std::to_string(ctx.size())});
    t.print(out);
  }
  return kSuccess;
}

int cmd_decompose(const DecomposeArgs& a, bool json, std::ostream& out) {
  const Loaded l = load(a.ctx);
  const Context& ctx = *l.ctx;
  Json j;
  j["context"] = context_json(ctx);
  j["type"] = render_type(l.type);
  j["mode"] = a.mode;
  Json comps = Json::array();
  std::vector<std::string> text;

  if (a.mode == "prime") {
    for (const auto& q : types::prime_decomposition(l.type)) {
      const auto mins = ctx.minimal(q.sat());
      Json e;
      e["atoms"] = ctx.render_atom_list(ctx.diagrams()[mins.front()].atoms);
      e["formula"] = ctx.render(q.canonical().formula());
      comps.push_back(e);
      text.push_back(ctx.render(q.canonical().formula()));
    }
  } else if (a.mode == "maximal") {
    std::vector<logic::EqFormula> parts;
    try {
      parts = types::maximal_decomposition(l.type);
    } catch (const types::NotKrullMinimalError& e) {
      j["verdict"] = "FAIL";
      j["error"] = std::string(errc_name(e.code()));
      j["message"] = e.what();
      j["chain"] = diagram_list(ctx, e.chain());
      if (json) {
        emit(out, j);
      } else {
        out << context_line(ctx) << '\n' << "type: " << render_type(l.type) << '\n'
            << "FAIL: " << e.what() << '\n';
        for (auto i : e.chain()) out << "  chain: " << diagram_text(ctx, i) << '\n';
      }
      return kVerdictFail;
    }
    for (const auto& f : parts) {
      comps.push_back(Json{{"formula", ctx.render(f.formula())}});
      text.push_back(ctx.render(f.formula()));
    }
  } else if (a.mode == "lksihn") {
    const std::vector<int> indep = variable_indices(ctx, a.indep);
    Json names = Json::array();
    for (int i : indep) names.push_back(ctx.var_names()[static_cast<std::size_t>(i)]);
    j["indep"] = names;
    for (const auto& f : dim::lksihn_decompose(l.type, indep)) {
      comps.push_back(Json{{"formula", ctx.render(f.formula())}});
      text.push_back(ctx.render(f.formula()));
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown decomposition mode '" + a.mode + "' (prime, maximal, lksihn)");
  }

  if (json) {
    j["components"] = comps;
    emit(out, j);
  } else {
    out << context_line(ctx) << '\n' << "type: " << render_type(l.type) << '\n';
    Table t({"#", a.mode == "prime" ? "prime component" : "component"});
    for (std::size_t i = 0; i < text.size(); ++i) t.add({std::to_string(i), text[i]});
    t.print(out);
    out << text.size() << " components\n";
  }
  return kSuccess;
}

int cmd_dim(const ContextArgs& a, bool json, std::ostream& out) {
  const Loaded l = load(a);
  const Context& ctx = *l.ctx;
  const dim::DimReport r = dim::dim_report(l.type);
  bool ok = true;
  for (const auto& c : r.checks) ok = ok && c.pass();
  std::vector<std::string> oset;
  for (int i : r.o.oset) oset.push_back(ctx.var_names()[static_cast<std::size_t>(i)]);
  if (json) {
    Json j;
    j["context"] = context_json(ctx);
    j["type"] = render_type(l.type);
    j["kdim"] = r.k.kdim;
    j["odim"] = r.o.odim;
    j["kchain"] = diagram_list(ctx, r.k.chain);
    j["oset"] = oset;
    j["checks"] = Json::array();
    for (const auto& c : r.checks) j["checks"].push_back(check_json(c, !c.pass()));
    emit(out, j);
  } else {
    out << context_line(ctx) << '\n' << "type: " << render_type(l.type) << '\n';
    Table t({"quantity", "value", "witness"});
    std::vector<std::string> chain;
    for (auto i : r.k.chain) chain.push_back(diagram_text(ctx, i));
    t.add({"kdim", std::to_string(r.k.kdim), join(chain, " > ")});
    t.add({"odim", std::to_string(r.o.odim), "{" + join(oset, ", ") + "}"});
    t.print(out);
    print_checks(r.checks, out);
  }
  return ok ? kSuccess : kVerdictFail;
}

int cmd_verify(const VerifyArgs& a, bool json, std::ostream& out) {
  const ContextPtr ctx = build_context(a.ctx);
  std::vector<dim::Check> checks;
  checks.push_back(dim::verify_decrease(*ctx, a.lattice_cap));
  checks.push_back(dim::verify_k_le_o(*ctx, a.lattice_cap));
  checks.push_back(dim::verify_kdim_zero(*ctx));
  checks.push_back(dim::verify_maxdim(*ctx, a.lattice_cap));
  checks.push_back(dim::verify_odim_zero(*ctx, a.lattice_cap));
  checks.push_back(dim::verify_dp(*ctx));
  const dim::KeqoReport k = dim::check_keqo(*ctx, a.param_bound, a.lattice_cap);
  const bool lkm = dim::locally_krull_minimal_here(*ctx);

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass();
  if (k.equality_asserted) ok = ok && k.equality.pass();

  if (json) {
    Json j;
    j["context"] = context_json(*ctx);
    j["locally_krull_minimal_here"] = lkm;
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c, true));
    Json kj;
    kj["param_bound"] = k.param_bound;
    kj["hypothesis"] = pass_fail(k.hypothesis_holds);
    kj["parameter_sets"] = k.parameter_sets;
    if (k.witness_params) {
      kj["witness"] = Json{{"params", structure_json(*k.witness_params)},
                           {"vars", k.witness_vars},
                           {"formula", k.witness_formula.value_or("")}};
    } else {
      kj["witness"] = nullptr;
    }
    kj["equality"] = check_json(k.equality, true);
    kj["equality_asserted"] = k.equality_asserted;
    j["keqo"] = kj;
    j["verdict"] = pass_fail(ok);
    emit(out, j);
  } else {
    out << context_line(*ctx) << '\n'
        << "D0 and D3 hold over this context: " << yes_no(lkm) << '\n';
    print_checks(checks, out);
    out << "keqo hypothesis (B up to size " << k.param_bound << ", " << k.parameter_sets
        << " parameter sets): " << pass_fail(k.hypothesis_holds) << '\n';
    if (k.witness_params)
      out << "  witness: B = " << structure_inline(*k.witness_params) << ", " << k.witness_vars
          << " z-variables, q = " << k.witness_formula.value_or("") << '\n';
    out << "kdim = odim: " << k.equality.failures << " failures in " << k.equality.instances << " instances ("
        << (k.equality_asserted ? "asserted" : "informational, hypothesis not met") << ")\n";
    for (const auto& d : k.equality_asserted ? k.equality.details : std::vector<std::string>{})
      out << "k_eq_o failure: " << d << '\n';
    out << "verdict: " << pass_fail(ok) << '\n';
  }
  return ok ? kSuccess : kVerdictFail;
}

int cmd_amalgamate(const AmalgamateArgs& a, bool json, std::ostream& out) {
  const dsl::TheorySpec theory = load_theory(a.theory);
  const auto sa = load_structure(a.a, theory.signature);
  const auto sm = load_structure(a.m, theory.signature);
  const auto sn = load_structure(a.n, theory.signature);
  const types::AmalgamResult r = types::amalgamate(theory, sa, sm, sn, a.slack);

  auto embedding = [&](const semantics::FiniteStructure& from, const std::vector<int>& e) {
    Json j = Json::object();
    for (std::size_t i = 0; i < e.size(); ++i) j[from.names()[i]] = r.amalgam->model.name(e[i]);
    return j;
  };
  if (json) {
    Json j;
    j["theory"] = theory.name;
    j["A"] = structure_json(sa);
    j["M"] = structure_json(sm);
    j["N"] = structure_json(sn);
    j["slack"] = a.slack;
    j["size_bound"] = r.size_bound;
    j["candidates"] = r.candidates;
    j["found"] = r.amalgam.has_value();
    if (r.amalgam) {
      j["model"] = structure_json(r.amalgam->model);
      j["embed_m"] = embedding(sm, r.amalgam->embed_m);
      j["embed_n"] = embedding(sn, r.amalgam->embed_n);
    } else {
      Json attempts = Json::array();
      for (const auto& at : r.attempts) {
        Json ids = Json::array();
        for (const auto& [x, y] : at.identified) ids.push_back({x, y});
        attempts.push_back({{"identified", ids}, {"extra", at.extra}, {"outcome", at.outcome}});
      }
      j["witness"] = {{"attempts", attempts}, {"rejected", r.rejected}, {"truncated", r.attempts.size() < r.rejected}};
    }
    j["verdict"] = pass_fail(r.amalgam.has_value());
    emit(out, j);
  } else {
    out << "theory " << theory.name << ": A = " << structure_inline(sa) << ", M = " << structure_inline(sm)
        << ", N = " << structure_inline(sn) << '\n';
    if (r.amalgam) {
      out << "amalgam: " << structure_inline(r.amalgam->model) << '\n';
      Table t({"map", "element", "image"});
      for (std::size_t i = 0; i < r.amalgam->embed_m.size(); ++i)
        t.add({"M", sm.names()[i], r.amalgam->model.name(r.amalgam->embed_m[i])});
      for (std::size_t i = 0; i < r.amalgam->embed_n.size(); ++i)
        t.add({"N", sn.names()[i], r.amalgam->model.name(r.amalgam->embed_n[i])});
      t.print(out);
    } else {
      out << "no amalgam with at most " << r.size_bound << " elements (" << r.candidates
          << " placements searched)\n";
      Table t({"identified", "extra", "outcome"});
      for (const auto& at : r.attempts) {
        std::vector<std::string> ids;
        for (const auto& [x, y] : at.identified) ids.push_back(x + "=" + y);
        t.add({ids.empty() ? "-" : join(ids, ", "), std::to_string(at.extra), at.outcome});
      }
      t.print(out);
    }
    out << "verdict: " << pass_fail(r.amalgam.has_value()) << '\n';
  }
  return r.amalgam ? kSuccess : kVerdictFail;
}

int cmd_entails(const EntailsArgs& a, bool json, std::ostream& out) {
  const ContextPtr ctx = build_context(a.ctx);
  const auto& sig = ctx->theory().signature;
  std::vector<logic::Formula> premises;
  for (const auto& p : split_list(a.premises, ';'))
    premises.push_back(dsl::parse_formula(p, sig, ctx->var_names(), ctx->param_names(),
                                          dsl::FormulaMode::QuantifierFree));
  const logic::Formula conclusion = dsl::parse_formula(a.conclusion, sig, ctx->var_names(), ctx->param_names(),
                                                       dsl::FormulaMode::QuantifierFree);
  const bool holds = semantics::entails(*ctx, premises, conclusion);
  // A countermodel: a diagram satisfying the premises but not the conclusion.
  std::optional<std::size_t> counter;
  if (!holds) {
    const BitVec prem = ctx->satisfying(premises);
    const BitVec conc = ctx->satisfying(conclusion);
    for (std::size_t i = 0; i < ctx->size() && !counter; ++i)
      if (prem.test(i) && !conc.test(i)) counter = i;
  }
  std::vector<std::string> rendered;
  for (const auto& p : premises) rendered.push_back(ctx->render(p));
  if (json) {
    Json j;
    j["context"] = context_json(*ctx);
    j["premises"] = rendered;
    j["conclusion"] = ctx->render(conclusion);
    j["entailed"] = holds;
    if (counter) {
      j["countermodel"] = Json{{"diagram", ctx->render_atom_list(ctx->diagrams()[*counter].atoms)},
                               {"model", structure_json(ctx->diagrams()[*counter].witness)}};
    }
    emit(out, j);
  } else {
    out << context_line(*ctx) << '\n';
    out << (rendered.empty() ? "true" : join(rendered, "; ")) << (holds ? " |- " : " |/- ")
        << ctx->render(conclusion) << '\n';
    if (counter)
      out << "countermodel: " << structure_inline(ctx->diagrams()[*counter].witness) << ", diagram "
          << diagram_text(*ctx, *counter) << '\n';
  }
  return kSuccess;
}

int cmd_probe(const ProbeArgs& a, bool json, std::ostream& out) {
  const ContextPtr ctx = build_context(a.ctx);
  const logic::EqFormula phi =
      dsl::parse_eq_formula(a.formula, ctx->theory().signature, ctx->var_names(), ctx->param_names());
  const types::ProbeReport r = types::solution_count_probe(*ctx, phi, a.max_size);
  if (json) {
    Json j;
    j["context"] = context_json(*ctx);
    j["formula"] = ctx->render(phi.formula());
    j["rows"] = Json::array();
    for (const auto& row : r.rows)
      j["rows"].push_back(Json{{"size", row.size}, {"max_solutions", row.max_solutions}, {"models", row.models}});
    j["growth_at_bound"] = r.growth_at_bound;
    emit(out, j);
  } else {
    out << context_line(*ctx) << '\n' << "formula: " << ctx->render(phi.formula()) << '\n';
    Table t({"size", "max solutions", "models over A"});
    for (const auto& row : r.rows)
      t.add({std::to_string(row.size), std::to_string(row.max_solutions), std::to_string(row.models)});
    t.print(out);
    out << "still growing at the bound: " << yes_no(r.growth_at_bound) << '\n';
  }
  return kSuccess;
}

int cmd_project(const ProjectArgs& a, bool json, std::ostream& out) {
  const Loaded l = load(a.ctx);
  const std::vector<int> keep = variable_indices(*l.ctx, a.keep);
  if (keep.empty()) throw Error(Errc::InvalidArgument, "--keep needs at least one variable");
  const EqType q = types::project_type(l.type, keep);
  const std::string formula = q.context().render(q.canonical().formula());
  if (json) {
    Json j;
    j["context"] = context_json(*l.ctx);
    j["type"] = render_type(l.type);
    j["projected_context"] = context_json(q.context());
    j["projection"] = formula;
    emit(out, j);
  } else {
    out << context_line(*l.ctx) << '\n' << "type: " << render_type(l.type) << '\n'
        << "projection onto " << join(q.context().var_names(), ", ") << ": " << formula << '\n';
  }
  return kSuccess;
}

}  // namespace ktypes::cli
