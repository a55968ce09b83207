#include <CLI11.hpp>

#include <algorithm>

#include "commands.hpp"
#include "ktypes/cli/cli.hpp"
#include "ktypes/error.hpp"

namespace ktypes::cli {

namespace {

void add_context(CLI::App* app, ContextArgs& c, bool with_type) {
  app->add_option("theory", c.theory, "theory file or bundled name (DT, LO_total, free, LO_inj)")->required();
  app->add_option("--params", c.params, "parameter structure file or bundled name")->capture_default_str();
  app->add_option("--vars", c.vars, "number of tuple variables")->capture_default_str()->check(CLI::Range(1, 16));
  if (with_type) app->add_option("--type", c.type, "equational type: formulas separated by ';'")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for equational types over universal relational theories", "ktypes"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the JSON report instead of a table");

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "check D0-D3 over all small parameter structures");
  c_audit->add_option("theory", audit.theory, "theory file or bundled name")->required();
  c_audit->add_option("--bound", audit.bound, "largest parameter structure")->capture_default_str();
  c_audit->add_option("--d2-slack", audit.d2_slack, "D2 extensions up to |A| + slack")->capture_default_str();
  c_audit->add_option("--tuple-vars", audit.tuple_vars, "D0 checked for 1..n variables")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));

  ContextArgs primes;
  auto* c_primes = app.add_subcommand("primes", "list the prime types (realizable diagrams)");
  add_context(c_primes, primes, false);

  ContextArgs classify;
  auto* c_classify = app.add_subcommand("classify", "classify an equational type");
  add_context(c_classify, classify, true);

  DecomposeArgs decompose;
  auto* c_decompose = app.add_subcommand("decompose", "decompose a type into prime, maximal or lksihn components");
  c_decompose->add_option("mode", decompose.mode, "prime, maximal or lksihn")
      ->required()
      ->check(CLI::IsMember({"prime", "maximal", "lksihn"}));
  add_context(c_decompose, decompose.ctx, true);
  c_decompose->add_option("--indep", decompose.indep, "independent variables for lksihn, e.g. z1,z2");

  ContextArgs dimargs;
  auto* c_dim = app.add_subcommand("dim", "Krull and algebraic dimension of a type");
  add_context(c_dim, dimargs, true);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "check the dimension theorems over a context");
  add_context(c_verify, verify.ctx, false);
  c_verify->add_option("--param-bound", verify.param_bound, "keqo: extensions B up to this size")
      ->capture_default_str();
  c_verify->add_option("--lattice-cap", verify.lattice_cap, "largest formula lattice enumerated in full")
      ->capture_default_str();

  AmalgamateArgs amalg;
  auto* c_amalg = app.add_subcommand("amalgamate", "search for an amalgam of M and N over A");
  c_amalg->add_option("theory", amalg.theory, "theory file or bundled name")->required();
  c_amalg->add_option("-A", amalg.a, "common substructure")->required();
  c_amalg->add_option("-M", amalg.m, "first model")->required();
  c_amalg->add_option("-N", amalg.n, "second model")->required();
  c_amalg->add_option("--slack", amalg.slack, "extra elements allowed")->capture_default_str();

  EntailsArgs entails;
  auto* c_entails = app.add_subcommand("entails", "decide premises |- conclusion over A");
  add_context(c_entails, entails.ctx, false);
  c_entails->add_option("--premises", entails.premises, "quantifier-free formulas separated by ';'");
  c_entails->add_option("--conclusion", entails.conclusion, "quantifier-free formula")->required();

  ProbeArgs probe;
  auto* c_probe = app.add_subcommand("probe", "largest solution sets of a 1-variable formula by model size");
  add_context(c_probe, probe.ctx, false);
  c_probe->add_option("--formula", probe.formula, "equational formula in x")->required();
  c_probe->add_option("--max-size", probe.max_size, "largest model size")->capture_default_str();

  ProjectArgs project;
  auto* c_project = app.add_subcommand("project", "restrict a type to a subset of its variables");
  add_context(c_project, project.ctx, true);
  c_project->add_option("--keep", project.keep, "variables kept, e.g. z1")->required();

  PolyArgs polyargs;
  auto* c_poly = app.add_subcommand("poly", "polynomial backend over the rationals");
  c_poly->add_option("op", polyargs.op, "gcd, extgcd, factor, primetype, groebner, member or dim")
      ->required()
      ->check(CLI::IsMember({"gcd", "extgcd", "factor", "primetype", "groebner", "member", "dim"}));
  c_poly->add_option("operands", polyargs.operands, "polynomials or a bracketed list [f, g]");
  c_poly->add_option("--nvars", polyargs.nvars, "dim: number of variables of the ambient ring")
      ->check(CLI::Range(0, 4));

  // The --json flag is accepted after the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*c_audit) return cmd_audit(audit, json, out);
    if (*c_primes) return cmd_primes(primes, json, out);
    if (*c_classify) return cmd_classify(classify, json, out);
    if (*c_decompose) return cmd_decompose(decompose, json, out);
    if (*c_dim) return cmd_dim(dimargs, json, out);
    if (*c_verify) return cmd_verify(verify, json, out);
    if (*c_amalg) return cmd_amalgamate(amalg, json, out);
    if (*c_entails) return cmd_entails(entails, json, out);
    if (*c_probe) return cmd_probe(probe, json, out);
    if (*c_project) return cmd_project(project, json, out);
    if (*c_poly) return cmd_poly(polyargs, json, out);
  } catch (const ParseError& e) {
    err << "ktypes: " << errc_name(e.code()) << " at " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "ktypes: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ktypes::cli
