#include <doctest.h>

#include <map>
#include <random>

#include "ktypes/error.hpp"
#include "ktypes/logic/formula.hpp"
#include "ktypes/logic/normal_form.hpp"
#include "ktypes/logic/signature.hpp"
#include "ktypes/logic/valuation.hpp"

using namespace ktypes;
using namespace ktypes::logic;

namespace {

Signature binary_r() { return Signature({{"r", 2}}); }

Formula random_monotone(std::mt19937& rng, const std::vector<Atom>& atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  const int k = pick(rng);
  if (k == 0 || depth <= 0) {
    std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
    return Formula::atom(atoms[a(rng)]);
  }
  if (k == 1) return std::uniform_int_distribution<int>(0, 9)(rng) == 0 ? Formula::top() : Formula::atom(atoms[0]);
  std::vector<Formula> kids;
  const int n = std::uniform_int_distribution<int>(2, 3)(rng);
  for (int i = 0; i < n; ++i) kids.push_back(random_monotone(rng, atoms, depth - 1));
  return k % 2 == 0 ? Formula::conj(kids) : Formula::disj(kids);
}

std::vector<bool> truth_table(const Formula& f, const std::vector<Atom>& atoms) {
  std::vector<bool> out;
  for (unsigned m = 0; m < (1u << atoms.size()); ++m) {
    BitVec bits(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) bits.set(i, (m >> i) & 1u);
    out.push_back(eval(f, Valuation::unconstrained(atoms, bits)));
  }
  return out;
}

}  // namespace

TEST_CASE("smart constructors simplify") {
  const Atom a = Atom::relation("r", {Slot::var(0), Slot::param("a")});
  const Formula fa = Formula::atom(a);
  CHECK(Formula::conj(fa, Formula::top()) == fa);
  CHECK(Formula::disj(fa, Formula::top()) == Formula::top());
  CHECK(Formula::conj(fa, Formula::bot()) == Formula::bot());
  CHECK(Formula::negate(Formula::negate(fa)) == fa);
  CHECK(Formula::equals(Slot::var(0), Slot::var(0)) == Formula::top());
  CHECK(Formula::equals(Slot::param("a"), Slot::var(0)) == Formula::equals(Slot::var(0), Slot::param("a")));
  const Formula nested = Formula::conj(fa, Formula::conj(fa, Formula::atom(Atom::relation("r", {Slot::var(0), Slot::var(0)}))));
  CHECK(nested.kind() == Formula::Kind::And);
  for (const auto& c : nested.children()) CHECK(c.kind() != Formula::Kind::And);
}

TEST_CASE("EqFormula rejects negation") {
  const Formula fa = Formula::atom(Atom::relation("r", {Slot::var(0), Slot::var(0)}));
  CHECK_NOTHROW(EqFormula{fa});
  CHECK_THROWS_AS(EqFormula{Formula::negate(fa)}, Error);
}

TEST_CASE("atom universe over one variable and one parameter") {
  const std::vector<std::string> params{"a"};
  const auto u = atom_universe(binary_r(), 1, params);
  // r(x,x), r(x,a), r(a,x), r(a,a), x = a.
  CHECK(u.size() == 5);
  std::size_t ground = 0;
  for (const auto& at : u) ground += at.is_ground() ? 1 : 0;
  CHECK(ground == 1);
}

TEST_CASE("valuation congruence") {
  const std::vector<std::string> params{"a"};
  const auto u = atom_universe(binary_r(), 1, params);
  // x = a true but r(x,x) and r(x,a) disagree: not congruent.
  BitVec bits(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].is_equality() || (u[i].args()[0].is_var() && u[i].args()[1].is_var())) bits.set(i);
  CHECK_THROWS_AS(Valuation(u, bits), Error);
  CHECK_FALSE(Valuation::unconstrained(u, bits).is_congruent());
  BitVec none(u.size());
  CHECK(Valuation(u, none).is_congruent());
}

TEST_CASE("normal form agrees with the truth table and is canonical") {
  const std::vector<std::string> params{"a", "b"};
  auto atoms = atom_universe(binary_r(), 1, params);
  atoms.erase(atoms.begin() + 6, atoms.end());
  std::mt19937 rng(12345);
  std::map<std::vector<bool>, Formula> seen;
  for (int trial = 0; trial < 400; ++trial) {
    const EqFormula f(random_monotone(rng, atoms, 4));
    const EqFormula nf = normal_form(f);
    const auto tt = truth_table(f, atoms);
    REQUIRE(tt == truth_table(nf, atoms));
    CHECK(normal_form(nf) == nf);
    CHECK(from_dnf(antichain_dnf(f)) == nf);
    // Equal truth tables give identical normal forms.
    auto [it, inserted] = seen.emplace(tt, nf.formula());
    if (!inserted) CHECK(it->second == nf.formula());
  }
  CHECK(seen.size() > 20);
}

TEST_CASE("antichain dnf shape") {
  const Atom p = Atom::relation("r", {Slot::var(0), Slot::param("a")});
  const Atom q = Atom::relation("r", {Slot::param("a"), Slot::var(0)});
  // p | (p & q) absorbs to p.
  const EqFormula f(Formula::disj(Formula::atom(p), Formula::conj(Formula::atom(p), Formula::atom(q))));
  const auto dnf = antichain_dnf(f);
  REQUIRE(dnf.terms.size() == 1);
  CHECK(dnf.terms[0] == std::vector<Atom>{p});
  CHECK(antichain_dnf(EqFormula(Formula::bot())).terms.empty());
  const auto top = antichain_dnf(EqFormula(Formula::top()));
  REQUIRE(top.terms.size() == 1);
  CHECK(top.terms[0].empty());
}

TEST_CASE("substitute renames and re-normalizes") {
  const Formula f = Formula::atom(Atom::relation("r", {Slot::var(0), Slot::var(1)}));
  const std::vector<Slot> map{Slot::var(0), Slot::var(0)};
  CHECK(substitute(f, map) == Formula::atom(Atom::relation("r", {Slot::var(0), Slot::var(0)})));
  const Formula e = Formula::equals(Slot::var(0), Slot::var(1));
  CHECK(substitute(e, map) == Formula::top());
  const std::vector<Slot> short_map{Slot::var(0)};
  CHECK_THROWS_AS(substitute(f, short_map), Error);
  CHECK(max_var(f) == 1);
}
