#include "commands.hpp"
#include "ktypes/cli/cli.hpp"
#include "ktypes/error.hpp"
#include "ktypes/poly/multipoly.hpp"
#include "ktypes/poly/parse.hpp"
#include "ktypes/poly/unipoly.hpp"
#include "output.hpp"

namespace ktypes::cli {

using poly::MultiPoly;
using poly::Rational;
using poly::UniPoly;

namespace {

// Univariate operands must share their variable (constants adapt to any).
struct UniOperands {
  std::vector<UniPoly> polys;
  std::string var = "x";
};

UniOperands univariates(const std::vector<std::string>& texts) {
  UniOperands r;
  int var = -1;
  for (const auto& t : texts) {
    const poly::Univariate u = poly::parse_univariate(t);
    if (u.poly.degree() > 0) {
      if (var >= 0 && var != u.var)
        throw Error(Errc::InvalidArgument, "operands use different variables");
      var = u.var;
    }
    r.polys.push_back(u.poly);
  }
  if (var >= 0) r.var = poly::kVarNames[var];
  return r;
}

std::vector<MultiPoly> polys_of(const std::vector<std::string>& texts) {
  if (texts.size() == 1 && texts[0].find('[') != std::string::npos) return poly::parse_ideal(texts[0]);
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(poly::parse_poly(t));
  return out;
}

std::vector<std::string> strings_of(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void need(const PolyArgs& a, std::size_t lo, std::size_t hi) {
  if (a.operands.size() < lo || a.operands.size() > hi)
    throw Error(Errc::InvalidArgument, "poly " + a.op + ": wrong number of operands");
}

std::string product(const Rational& lead, const std::vector<std::pair<UniPoly, int>>& factors,
                    const std::string& var) {
  std::string s;
  if (factors.empty()) return lead.get_str();
  if (lead == -1) s = "-";
  else if (lead != 1) s = lead.get_str() + "*";
  for (const auto& [f, m] : factors) {
    s += "(" + f.to_string(var) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

std::string kind_name(poly::PolyPrimeType::Kind k) {
  switch (k) {
    case poly::PolyPrimeType::Kind::Trivial: return "trivial";
    case poly::PolyPrimeType::Kind::Maximal: return "maximal";
    case poly::PolyPrimeType::Kind::NonPrime: return "non-prime";
  }
  return "";
}

}  // namespace

int cmd_poly(const PolyArgs& a, bool json, std::ostream& out) {
  Json j;
  j["op"] = a.op;
  std::string text;

  if (a.op == "gcd" || a.op == "extgcd") {
    need(a, 2, 2);
    const UniOperands u = univariates(a.operands);
    j["f"] = u.polys[0].to_string(u.var);
    j["g"] = u.polys[1].to_string(u.var);
    if (a.op == "gcd") {
      const UniPoly d = poly::gcd(u.polys[0], u.polys[1]);
      j["gcd"] = d.to_string(u.var);
      text = d.to_string(u.var);
    } else {
      const poly::ExtGcd e = poly::ext_gcd(u.polys[0], u.polys[1]);
      j["d"] = e.d.to_string(u.var);
      j["u"] = e.u.to_string(u.var);
      j["v"] = e.v.to_string(u.var);
      text = "d=" + e.d.to_string(u.var) + " u=" + e.u.to_string(u.var) + " v=" + e.v.to_string(u.var);
    }
  } else if (a.op == "factor") {
    need(a, 1, 1);
    const UniOperands u = univariates(a.operands);
    const UniPoly& f = u.polys[0];
    const auto factors = poly::factor_q(f);
    j["poly"] = f.to_string(u.var);
    j["lead"] = f.lead().get_str();
    j["factors"] = Json::array();
    for (const auto& [g, m] : factors) j["factors"].push_back(Json{{"factor", g.to_string(u.var)}, {"multiplicity", m}});
    text = product(f.lead(), factors, u.var);
  } else if (a.op == "primetype") {
    need(a, 1, 64);
    const UniOperands u = univariates(a.operands);
    const poly::PolyPrimeType t = poly::poly_prime_type(u.polys);
    std::vector<std::string> sys, factors;
    for (const auto& p : u.polys) sys.push_back(p.to_string(u.var));
    for (const auto& p : t.factors) factors.push_back(p.to_string(u.var));
    j["system"] = sys;
    j["kind"] = kind_name(t.kind);
    j["gcd"] = t.gcd.to_string(u.var);
    if (t.kind == poly::PolyPrimeType::Kind::Maximal) j["minpoly"] = t.minpoly.to_string(u.var);
    j["factors"] = factors;
    text = kind_name(t.kind) + " (gcd " + t.gcd.to_string(u.var) + ")";
    if (t.kind == poly::PolyPrimeType::Kind::Maximal) text += ", minpoly " + t.minpoly.to_string(u.var);
    if (t.kind == poly::PolyPrimeType::Kind::NonPrime) text += ", components " + join(factors, ", ");
  } else if (a.op == "groebner") {
    const auto gens = polys_of(a.operands);
    const auto basis = strings_of(poly::groebner(gens));
    j["generators"] = strings_of(gens);
    j["basis"] = basis;
    text = "[" + join(basis, ", ") + "]";
  } else if (a.op == "member") {
    need(a, 2, 64);
    const MultiPoly f = poly::parse_poly(a.operands[0]);
    const auto gens = polys_of({a.operands.begin() + 1, a.operands.end()});
    const bool in = poly::ideal_member(f, poly::Ideal(gens));
    j["poly"] = f.to_string();
    j["generators"] = strings_of(gens);
    j["member"] = in;
    text = in ? "true" : "false";
  } else if (a.op == "dim") {
    const auto gens = polys_of(a.operands);
    int nvars = a.nvars;
    if (nvars < 0) {
      unsigned used = 0;
      for (const auto& g : gens) used |= g.variables();
      nvars = 0;
      while (used >> nvars) ++nvars;
    }
    const int d = poly::ideal_dim(poly::Ideal(gens), nvars);
    j["generators"] = strings_of(gens);
    j["nvars"] = nvars;
    j["dim"] = d;
    text = std::to_string(d);
  } else {
    throw Error(Errc::InvalidArgument, "unknown poly operation '" + a.op + "'");
  }

  if (json) emit(out, j);
  else out << text << '\n';
  return kSuccess;
}

}  // namespace ktypes::cli
