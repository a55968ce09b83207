#include "ktypes/fixtures.hpp"

#include "ktypes/dsl/parser.hpp"
#include "ktypes/error.hpp"

namespace ktypes::fixtures {

namespace {

struct Entry {
  std::string_view name;
  std::string_view text;
};

constexpr Entry kTheories[] = {
    {"DT", R"KT(# Disjoint unions of tournaments.
theory DT
relations: r/2
axiom: all x. !r(x,x)
axiom: all x,y. !(r(x,y) & r(y,x))
axiom: all x,y,z. ((r(x,y)|r(y,x)) & (r(y,z)|r(z,y)) & x != z) -> (r(x,z)|r(z,x))
)KT"},
    {"LO_total", R"KT(# DT plus totality: every two distinct elements are comparable.
theory LO_total
relations: r/2
axiom: all x. !r(x,x)
axiom: all x,y. !(r(x,y) & r(y,x))
axiom: all x,y,z. ((r(x,y)|r(y,x)) & (r(y,z)|r(z,y)) & x != z) -> (r(x,z)|r(z,x))
axiom: all x,y. x != y -> (r(x,y)|r(y,x))
)KT"},
    {"free", R"KT(# One binary relation, no axioms.
theory free
relations: r/2
)KT"},
    {"LO_inj", R"KT(# LO_total with a unary mark and injective predecessors: two elements
# below the same element coincide. Amalgamation fails over {a} for the
# bundled structures A_inj, M_inj, N_inj.
theory LO_inj
relations: r/2, u/1
axiom: all x. !r(x,x)
axiom: all x,y. !(r(x,y) & r(y,x))
axiom: all x,y,z. ((r(x,y)|r(y,x)) & (r(y,z)|r(z,y)) & x != z) -> (r(x,z)|r(z,x))
axiom: all x,y. x != y -> (r(x,y)|r(y,x))
axiom: all x,y,z. (r(x,z) & r(y,z)) -> x = y
)KT"},
};

constexpr Entry kStructures[] = {
    {"A1", R"KT({"universe":["a"],"relations":{"r":[]}}
)KT"},
    {"M1", R"KT({"universe":["a","b"],"relations":{"r":[["a","b"]]}}
)KT"},
    {"N1", R"KT({"universe":["a","c"],"relations":{"r":[["c","a"]]}}
)KT"},
    {"empty", R"KT(universe:
)KT"},
    {"A_inj", R"KT(universe: a
)KT"},
    {"M_inj", R"KT(universe: a, b
r: (b,a)
u: (b)
)KT"},
    {"N_inj", R"KT(universe: a, c
r: (c,a)
)KT"},
};

template <std::size_t N>
std::optional<std::string_view> lookup(const Entry (&table)[N], std::string_view name) {
  for (const auto& e : table)
    if (e.name == name) return e.text;
  return std::nullopt;
}

template <std::size_t N>
std::vector<std::string> names(const Entry (&table)[N]) {
  std::vector<std::string> out;
  for (const auto& e : table) out.emplace_back(e.name);
  return out;
}

}  // namespace

std::optional<std::string_view> theory_text(std::string_view name) { return lookup(kTheories, name); }
std::optional<std::string_view> structure_text(std::string_view name) { return lookup(kStructures, name); }
std::vector<std::string> theory_names() { return names(kTheories); }
std::vector<std::string> structure_names() { return names(kStructures); }

dsl::TheorySpec theory(std::string_view name) {
  auto t = theory_text(name);
  if (!t) throw Error(Errc::InvalidArgument, "no bundled theory named '" + std::string(name) + "'");
  return dsl::parse_theory(*t);
}

semantics::FiniteStructure structure(std::string_view name, const logic::Signature& sig) {
  auto t = structure_text(name);
  if (!t) throw Error(Errc::InvalidArgument, "no bundled structure named '" + std::string(name) + "'");
  return dsl::parse_structure(*t, sig);
}

}  // namespace ktypes::fixtures
