// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "ktypes/cli/cli.hpp"
#include "ktypes/dim/dimension.hpp"
#include "ktypes/dsl/parser.hpp"
#include "ktypes/error.hpp"
#include "ktypes/fixtures.hpp"
#include "ktypes/poly/multipoly.hpp"
#include "ktypes/poly/parse.hpp"
#include "ktypes/poly/unipoly.hpp"
#include "ktypes/semantics/enumerate.hpp"
#include "ktypes/semantics/model.hpp"
#include "ktypes/types/amalgam.hpp"
#include "ktypes/types/eq_type.hpp"
#include "ktypes/types/probe.hpp"
#include "oracle/brute.hpp"
#include "oracle/definitional.hpp"

using namespace ktypes;
using semantics::Context;
using semantics::ContextPtr;
using semantics::FiniteStructure;
using Json = nlohmann::ordered_json;

namespace {

// Failures of one criterion plus a one-line summary of what was checked.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool run_criterion(int number, const std::string& title, double time_limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  if (time_limit > 0 && secs > time_limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.1f s exceeds %.0f s", secs, time_limit);
    o.failures.emplace_back(buf);
  }
  const bool pass = o.failures.empty();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  if (!o.summary.empty()) std::cout << " [" << o.summary << "]";
  std::cout << " (" << timing << ")\n";
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << '\n';
  if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
  std::cout.flush();
  return pass;
}

struct CliResult {
  int code;
  std::string out;
  double secs;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const auto t0 = std::chrono::steady_clock::now();
  const int code = cli::run(args, out, err);
  return {code, out.str(), seconds_since(t0)};
}

const dsl::TheorySpec& dt() {
  static const dsl::TheorySpec t = fixtures::theory("DT");
  return t;
}

FiniteStructure str(const char* name) { return fixtures::structure(name, dt().signature); }

logic::Formula conjunction(const types::EqType& p) {
  std::vector<logic::Formula> parts;
  for (const auto& g : p.generators()) parts.push_back(g.formula());
  return logic::Formula::conj(std::move(parts));
}

std::string describe(const Context& ctx, const BitVec& upset) {
  return ctx.render(types::upset_formula(ctx, upset).formula());
}

// Criterion 1.
void fixture_audit(Outcome& o) {
  const CliResult dt_run = cli({"--json", "audit", "DT", "--bound", "2"});
  const Json d = Json::parse(dt_run.out);
  o.expect(dt_run.code == 0, "audit DT exit code " + std::to_string(dt_run.code));
  for (const char* ax : {"d0", "d1", "d2", "d3"}) o.expect(d[ax]["verdict"] == "PASS", std::string("DT ") + ax + " not PASS");
  o.expect(dt_run.secs <= 10, "audit DT slower than 10 s");

  const CliResult lo_run = cli({"--json", "audit", "LO_total", "--bound", "2"});
  const Json l = Json::parse(lo_run.out);
  o.expect(lo_run.code == 1, "audit LO_total exit code " + std::to_string(lo_run.code));
  o.expect(l["d0"]["verdict"] == "FAIL", "LO_total D0 not FAIL");
  o.expect(lo_run.secs <= 10, "audit LO_total slower than 10 s");
  std::string witness = "none";
  if (!l["d0"]["witnesses"].empty()) {
    const Json& w = l["d0"]["witnesses"][0];
    witness = w["formula"].get<std::string>();
    // Replay: the disjunction is entailed, no disjunct is.
    const FiniteStructure a = fixtures::structure("A1", fixtures::theory("LO_total").signature);
    const auto ctx = semantics::make_context(fixtures::theory("LO_total"), a, 1);
    const auto phi = dsl::parse_formula(witness, ctx->theory().signature, ctx->var_names(), ctx->param_names(), dsl::FormulaMode::QuantifierFree);
    o.expect(semantics::entails(*ctx, {}, phi), "witness disjunction not entailed");
    for (const auto& disjunct : w["diagrams"]) {
      std::vector<logic::Formula> atoms;
      for (const auto& at : disjunct)
        atoms.push_back(dsl::parse_formula(at.get<std::string>(), ctx->theory().signature, ctx->var_names(), ctx->param_names(), dsl::FormulaMode::QuantifierFree));
      o.expect(!semantics::entails(*ctx, {}, logic::Formula::conj(atoms)), "a witness disjunct is entailed");
    }
  } else {
    o.failures.push_back("LO_total D0 failure has no witness");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "DT all PASS in %.2f s; LO_total D0 FAIL, witness %s, in %.2f s", dt_run.secs,
                witness.c_str(), lo_run.secs);
  o.summary = buf;
}

// Criterion 2.
void prime_census(Outcome& o) {
  struct Case {
    const char* params;
    int vars;
    std::size_t expected;
  };
  std::string summary;
  for (const Case& c : {Case{"A1", 1, 4}, Case{"empty", 2, 4}, Case{"empty", 1, 1}}) {
    const auto ctx = semantics::make_context(dt(), str(c.params), c.vars);
    const std::size_t brute =
        oracle::realized_diagrams(dt(), ctx->params(), c.vars, ctx->universe(), ctx->params().size() + static_cast<std::size_t>(c.vars)).size();
    std::size_t primes = 0;
    for (std::size_t i = 0; i < ctx->size(); ++i)
      if (types::classify(types::EqType::of_diagram(ctx, i)).prime) ++primes;
    const std::string label = std::string("(DT,") + c.params + "," + std::to_string(c.vars) + ")";
    o.expect(ctx->size() == c.expected, label + ": " + std::to_string(ctx->size()) + " diagrams");
    o.expect(primes == c.expected, label + ": " + std::to_string(primes) + " prime types");
    o.expect(brute == c.expected, label + ": brute force found " + std::to_string(brute));
    summary += (summary.empty() ? "" : ", ") + label + " = " + std::to_string(primes);
  }
  o.summary = summary + "; brute force agrees";
}

std::vector<ContextPtr> dt_contexts(std::size_t max_params, int max_vars) {
  std::vector<ContextPtr> out;
  for (std::size_t n = 0; n <= max_params; ++n)
    for (const auto& a : semantics::models_up_to_iso(dt(), n))
      for (int v = 1; v <= max_vars; ++v) out.push_back(semantics::make_context(dt(), a, v));
  return out;
}

// Criterion 3.
void fact_suite(Outcome& o) {
  std::size_t tuples = 0, types_seen = 0, decompositions = 0, maximal_parts = 0, inapplicable = 0;
  bool complete = true;
  const auto contexts = dt_contexts(2, 2);
  for (const auto& ctx : contexts) {
    const std::string where = "over " + std::to_string(ctx->params().size()) + " params, " + std::to_string(ctx->vars()) + " vars";
    // (i) eqn_tp of every tuple in every extension large enough to hold it.
    for (std::size_t size = std::max<std::size_t>(ctx->params().size(), 1);
         size <= ctx->params().size() + static_cast<std::size_t>(ctx->vars()); ++size) {
      for (const auto& s : semantics::extensions(dt(), ctx->params(), size)) {
        std::vector<int> tuple(static_cast<std::size_t>(ctx->vars()), 0);
        while (true) {
          ++tuples;
          o.expect(types::classify(types::eqn_tp(ctx, s, tuple)).prime, "eqn_tp not prime " + where);
          std::size_t i = 0;
          while (i < tuple.size() && static_cast<std::size_t>(++tuple[i]) == size) tuple[i++] = 0;
          if (i == tuple.size()) break;
        }
      }
    }
    const auto lattice = types::enumerate_lattice(*ctx);
    complete = complete && lattice.complete;
    for (const auto& u : lattice.upsets) {
      ++types_seen;
      const types::EqType q = types::EqType::from_upset(ctx, u);
      const auto cls = types::classify(q);
      // (ii)
      if (u.any()) {
        std::vector<logic::Formula> both = types::bullet_part(q);
        for (const auto& g : q.generators()) both.push_back(g.formula());
        o.expect(cls.prime == semantics::consistent(*ctx, both), "prime vs bullet mismatch " + where + ": " + describe(*ctx, u));
      }
      // (iii)
      const auto parts = types::prime_decomposition(q);
      std::vector<logic::Formula> disj;
      for (const auto& p : parts) {
        o.expect(types::classify(p).prime, "non-prime component " + where);
        disj.push_back(p.canonical().formula());
      }
      const logic::Formula lhs = conjunction(q), rhs = logic::Formula::disj(disj);
      o.expect(semantics::entails(*ctx, std::vector<logic::Formula>{lhs}, rhs) &&
                   semantics::entails(*ctx, std::vector<logic::Formula>{rhs}, lhs),
               "prime decomposition does not round-trip " + where + ": " + describe(*ctx, u));
      // (iv)
      if (!cls.consistent || cls.trivial) continue;
      ++decompositions;
      try {
        for (const auto& f : types::maximal_decomposition(q)) {
          ++maximal_parts;
          o.expect(types::classify(types::EqType(ctx, {f})).maximal, "non-maximal member " + where);
        }
      } catch (const types::NotKrullMinimalError&) {
        // D3 concerns single variables; with two variables a prime component
        // may sit below another one, and the decomposition is refused.
        o.expect(ctx->vars() > 1, "maximal decomposition refused " + where + ": " + describe(*ctx, u));
        ++inapplicable;
      }
    }
  }
  o.summary = std::to_string(contexts.size()) + " contexts, " + std::to_string(tuples) + " tuples, " +
              std::to_string(types_seen) + " types" + (complete ? " (full lattices)" : " (sampled lattices)") + ", " +
              std::to_string(decompositions - inapplicable) + " maximal decompositions with " +
              std::to_string(maximal_parts) + " members, " + std::to_string(inapplicable) +
              " 2-variable types with no maximal decomposition";
}

// Criterion 4.
void dimension_suite(Outcome& o) {
  const auto a1 = semantics::make_context(dt(), str("A1"), 1);
  const auto e2 = semantics::make_context(dt(), str("empty"), 2);
  const auto ka = dim::krull_dim(types::EqType::trivial(a1)), ke = dim::krull_dim(types::EqType::trivial(e2));
  const auto oa = dim::alg_dim(types::EqType::trivial(a1)), oe = dim::alg_dim(types::EqType::trivial(e2));
  o.expect(ka.kdim == 1 && oa.odim == 1, "(DT,A1,1): kdim " + std::to_string(ka.kdim) + ", odim " + std::to_string(oa.odim));
  o.expect(ke.kdim == 1 && oe.odim == 2, "(DT,empty,2): kdim " + std::to_string(ke.kdim) + ", odim " + std::to_string(oe.odim));

  // Independent longest-chain oracle over the diagram poset.
  auto longest_chain = [](const Context& ctx, const BitVec& up) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (up.test(i)) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return ctx.diagrams()[x].atoms.count() < ctx.diagrams()[y].atoms.count(); });
    std::vector<std::size_t> len(ctx.size(), 0);
    std::size_t best = 0;
    for (std::size_t x : order) {
      for (std::size_t y : order)
        if (y != x && ctx.diagrams()[y].atoms.is_subset_of(ctx.diagrams()[x].atoms)) len[x] = std::max(len[x], len[y] + 1);
      best = std::max(best, len[x]);
    }
    return best;
  };
  std::size_t checks = 0, types_seen = 0;
  for (const auto& ctx : {a1, e2}) {
    for (const auto* c : {"decrease", "k_le_o", "kdim_zero"}) {
      const std::string name = c;
      const dim::Check r = name == "decrease" ? dim::verify_decrease(*ctx)
                           : name == "k_le_o" ? dim::verify_k_le_o(*ctx)
                                              : dim::verify_kdim_zero(*ctx);
      ++checks;
      o.expect(r.failures == 0, name + ": " + std::to_string(r.failures) + " failures");
    }
    for (const auto& u : types::enumerate_lattice(*ctx).upsets) {
      if (u.none()) continue;
      ++types_seen;
      const types::EqType p = types::EqType::from_upset(ctx, u);
      const std::size_t k = dim::krull_dim(p).kdim;
      o.expect(k == longest_chain(*ctx, u), "kdim differs from longest chain: " + describe(*ctx, u));
      const auto cls = types::classify(p);
      if (cls.prime) o.expect((k == 0) == cls.maximal, "kdim 0 vs maximal: " + describe(*ctx, u));
    }
  }
  o.summary = "kdim/odim 1/1 and 1/2; " + std::to_string(checks) + " theorem checks, " + std::to_string(types_seen) +
              " types against the longest-chain oracle";
}

// Criterion 5.
void keqo_check(Outcome& o) {
  const auto e2 = semantics::make_context(dt(), str("empty"), 2);
  const auto r = dim::check_keqo(*e2, 2);
  o.expect(!r.hypothesis_holds, "hypothesis reported as holding");
  o.expect(r.witness_params.has_value() && r.witness_params->size() == 0, "witness B is not the empty structure");
  o.expect(!r.equality_asserted, "equality asserted despite failed hypothesis");
  o.expect(r.equality.failures > 0, "kdim = odim everywhere, contradicting the strict gap");
  // o(x/∅) is trivial because ¬r(x,x) is entailed.
  const auto e1 = semantics::make_context(dt(), str("empty"), 1);
  const auto o1 = types::transcendental_type(*e1);
  o.expect(o1.trivial, "o(x/empty) not trivial");
  const logic::Formula not_rxx = dsl::parse_formula("!r(x,x)", dt().signature, e1->var_names(), e1->param_names(), dsl::FormulaMode::QuantifierFree);
  o.expect(semantics::entails(*e1, {}, not_rxx), "!r(x,x) not entailed");
  o.summary = "hypothesis FAIL, B = {}" + (r.witness_formula ? ", q = " + *r.witness_formula : std::string()) +
              "; equality fails on " + std::to_string(r.equality.failures) + " types";
}

// Criterion 6.
void amalgamation(Outcome& o) {
  const FiniteStructure a = str("A1"), m = str("M1"), n = str("N1");
  const auto r = types::amalgamate(dt(), a, m, n, 0);
  if (!r.amalgam) {
    o.failures.push_back("no amalgam found");
    return;
  }
  const auto& p = r.amalgam->model;
  o.expect(p.size() == 3, "amalgam has " + std::to_string(p.size()) + " elements");
  o.expect(semantics::is_model(p, dt()), "amalgam is not a model");
  o.expect(oracle::is_model(oracle::from_structure(p), dt()), "oracle rejects the amalgam");
  const FiniteStructure mi = p.induced(r.amalgam->embed_m), ni = p.induced(r.amalgam->embed_n);
  for (std::size_t rel = 0; rel < dt().signature.size(); ++rel) {
    o.expect(mi.tuples(rel) == m.tuples(rel), "restriction to M differs from M1");
    o.expect(ni.tuples(rel) == n.tuples(rel), "restriction to N differs from N1");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    o.expect(r.amalgam->embed_m[static_cast<std::size_t>(*m.element(a.names()[i]))] ==
                 r.amalgam->embed_n[static_cast<std::size_t>(*n.element(a.names()[i]))],
             "embeddings disagree on A");
  std::ostringstream s;
  s << p.size() << " elements, " << r.candidates << " placement(s) searched";
  o.summary = s.str();
}

// Criterion 7.
void probe(Outcome& o) {
  const auto ctx = semantics::make_context(dt(), str("A1"), 1);
  const auto phi = dsl::parse_eq_formula("r(x,a)", dt().signature, ctx->var_names(), ctx->param_names());
  const auto r = types::solution_count_probe(*ctx, phi, 5);
  std::string counts;
  std::size_t seen = 0;
  for (const auto& row : r.rows) {
    if (row.size < 2) continue;
    ++seen;
    counts += (counts.empty() ? "" : ",") + std::to_string(row.max_solutions);
    o.expect(row.max_solutions == row.size - 1,
             "size " + std::to_string(row.size) + ": " + std::to_string(row.max_solutions) + " solutions");
  }
  o.expect(seen == 4, "rows for sizes 2..5 missing");
  o.expect(r.growth_at_bound, "growth not flagged");
  // Oracle: brute force over all tables on 2..4 elements.
  const oracle::Tables a = oracle::from_structure(ctx->params());
  for (std::size_t s = 2; s <= 4; ++s) {
    std::size_t best = 0;
    oracle::for_each_extension(dt(), a, s, [&](const oracle::Tables& b) {
      std::size_t count = 0;
      for (std::size_t x = 0; x < s; ++x) count += b.holds(0, {static_cast<int>(x), 0}) ? 1 : 0;
      best = std::max(best, count);
    });
    o.expect(best == s - 1, "oracle disagrees at size " + std::to_string(s));
  }
  o.summary = "max counts " + counts + " for s = 2..5, growth flagged; brute force agrees for s <= 4";
}

// Criterion 8.
void polynomial_backend(Outcome& o) {
  using namespace poly;
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> deg(0, 6), num(-20, 20), den(1, 6);
  auto random_poly = [&] {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      c.push_back(q);
    }
    return UniPoly(c);
  };
  std::size_t verified = 0;
  while (verified < 100) {
    const UniPoly f = random_poly(), g = random_poly();
    if (f.is_zero() && g.is_zero()) continue;
    const ExtGcd e = ext_gcd(f, g);
    o.expect(e.u * f + e.v * g == e.d, "Bezout identity fails for " + f.to_string() + ", " + g.to_string());
    o.expect((f.is_zero() || f.divmod(e.d).second.is_zero()) && (g.is_zero() || g.divmod(e.d).second.is_zero()),
             "d does not divide the inputs");
    ++verified;
  }
  std::string fx;
  for (const auto& [p, m] : factor_q(parse_univariate("x^4 - 1").poly)) fx += "(" + p.to_string() + ")" + (m > 1 ? "^" + std::to_string(m) : "");
  o.expect(fx == "(x - 1)(x + 1)(x^2 + 1)", "factor_q(x^4 - 1) = " + fx);
  const auto pt = poly_prime_type({parse_univariate("x^2 - 1").poly, parse_univariate("x^3 - 1").poly});
  o.expect(pt.kind == PolyPrimeType::Kind::Maximal && pt.minpoly.to_string() == "x - 1", "prime type of {x^2-1, x^3-1}");
  const int dxy = ideal_dim(Ideal(parse_ideal("[x*y]")), 2), dxy2 = ideal_dim(Ideal(parse_ideal("[x, y]")), 2),
            d0 = ideal_dim(Ideal(), 2), dx = ideal_dim(Ideal(parse_ideal("[x]")), 2);
  o.expect(dxy == 1, "dim <xy> = " + std::to_string(dxy));
  o.expect(dxy2 == 0, "dim <x,y> = " + std::to_string(dxy2));
  o.expect(d0 == 2, "dim <> = " + std::to_string(d0));
  o.expect(d0 > dx && dx > dxy2 && dx == 1, "chain dims " + std::to_string(d0) + " > " + std::to_string(dx) + " > " + std::to_string(dxy2));
  // The chain is strict: x is not in <0>, y is not in <x>.
  o.expect(!ideal_member(parse_poly("x"), Ideal()) && !ideal_member(parse_poly("y"), Ideal(parse_ideal("[x]"))),
           "ideal chain not strict");
  o.summary = std::to_string(verified) + " Bezout identities; " + fx + "; dims 1, 0, 2; chain 2 > 1 > 0";
}

// Criterion 9. Every theory and parameter structure with |A| + vars <= 4.
// The definitional procedure is cubic in the number of diagrams, so
// contexts above kOracleCap diagrams are counted as skipped; the bundled
// DT and LO_total contexts all fall below it.
void cross_validation(Outcome& o) {
  constexpr std::size_t kOracleCap = 600;
  std::size_t contexts = 0, skipped = 0, types_checked = 0, order_pairs = 0, discrepancies = 0;
  std::string summary;
  std::map<std::string, std::size_t> skipped_by_shape;
  for (const char* name : {"DT", "LO_total", "free", "LO_inj"}) {
    const auto t = fixtures::theory(name);
    std::size_t here = 0;
    for (std::size_t n = 0; n < 4; ++n) {
      for (const auto& a : semantics::models_up_to_iso(t, n)) {
        for (int v = 1; n + static_cast<std::size_t>(v) <= 4; ++v) {
          const std::size_t size = semantics::make_context(t, a, v)->size();
          if (size > kOracleCap) {
            ++skipped;
            ++skipped_by_shape[std::string(name) + "(|A|=" + std::to_string(n) + ",v=" + std::to_string(v) + ")"];
            continue;
          }
          const auto r = oracle::cross_validate(t, a, v);
          ++contexts;
          ++here;
          types_checked += r.types_checked;
          order_pairs += r.order_pairs;
          discrepancies += r.discrepancies;
          for (const auto& d : r.details) o.failures.push_back(std::string(name) + ": " + d);
          if (r.discrepancies > r.details.size())
            o.failures.push_back(std::string(name) + ": " + std::to_string(r.discrepancies) + " discrepancies");
        }
      }
    }
    summary += (summary.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(here);
  }
  std::string skipped_list;
  for (const auto& [shape, count] : skipped_by_shape)
    skipped_list += (skipped_list.empty() ? "" : ", ") + shape + " x" + std::to_string(count);
  o.summary = std::to_string(contexts) + " contexts (" + summary + "); " + std::to_string(types_checked) + " types, " +
              std::to_string(order_pairs) + " order pairs, " + std::to_string(discrepancies) + " discrepancies; " +
              std::to_string(skipped) + " skipped above " + std::to_string(kOracleCap) + " diagrams" +
              (skipped_list.empty() ? "" : ": " + skipped_list);
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "fixture audit (DT passes D0-D3, LO_total fails D0 with witness)", 20, fixture_audit);
  ok &= run_criterion(2, "prime-type census 4 / 4 / 1", 0, prime_census);
  ok &= run_criterion(3, "fact suite over DT contexts with |A| <= 2, vars <= 2", 60, fact_suite);
  ok &= run_criterion(4, "dimension suite", 0, dimension_suite);
  ok &= run_criterion(5, "keqo hypothesis fails on (DT, empty, 2) with B = empty", 0, keqo_check);
  ok &= run_criterion(6, "amalgamation of M1 and N1 over A1", 0, amalgamation);
  ok &= run_criterion(7, "solution-count probe for r(x,a) over A1", 0, probe);
  ok &= run_criterion(8, "polynomial backend", 30, polynomial_backend);
  ok &= run_criterion(9, "fast characterizations agree with the definitional procedure", 0, cross_validation);
  std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << '\n';
  return ok ? 0 : 1;
}
