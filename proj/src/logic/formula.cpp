#include "ktypes/logic/formula.hpp"

#include <algorithm>
#include <optional>

#include "ktypes/error.hpp"
#include "ktypes/logic/signature.hpp"

namespace ktypes::logic {

Atom Atom::relation(std::string name, std::vector<Slot> args) {
  return Atom(false, std::move(name), std::move(args));
}

Atom Atom::equality(Slot lhs, Slot rhs) {
  if (lhs == rhs) throw Error(Errc::InvalidArgument, "equality atom with identical sides");
  if (rhs < lhs) std::swap(lhs, rhs);
  return Atom(true, std::string(kEquality), {std::move(lhs), std::move(rhs)});
}

bool Atom::mentions_var() const {
  return std::any_of(args_.begin(), args_.end(), [](const Slot& s) { return s.is_var(); });
}

unsigned long long Atom::var_mask() const {
  unsigned long long m = 0;
  for (const auto& s : args_)
    if (s.is_var()) m |= 1ull << s.var_index();
  return m;
}

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;
  std::vector<Formula> kids;
};

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Top, std::nullopt, {}});
  return Formula(n);
}

Formula Formula::bot() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Bot, std::nullopt, {}});
  return Formula(n);
}

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}}));
}

Formula Formula::equals(Slot s, Slot t) {
  if (s == t) return top();
  return atom(Atom::equality(std::move(s), std::move(t)));
}

Formula Formula::negate(Formula f) {
  switch (f.kind()) {
    case Kind::Top: return bot();
    case Kind::Bot: return top();
    case Kind::Not: return f.children().front();
    default: break;
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(f)}}));
}

namespace {

// Shared flattening for And (absorbing = Bot, unit = Top) and Or (dual).
std::vector<Formula> flatten(std::vector<Formula> parts, Formula::Kind self,
                             Formula::Kind unit, Formula::Kind absorbing,
                             bool& absorbed) {
  std::vector<Formula> out;
  absorbed = false;
  for (auto& p : parts) {
    if (p.kind() == unit) continue;
    if (p.kind() == absorbing) {
      absorbed = true;
      return {};
    }
    if (p.kind() == self) {
      for (const auto& k : p.children()) out.push_back(k);
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

Formula Formula::conj(std::vector<Formula> parts) {
  bool absorbed = false;
  auto kids = flatten(std::move(parts), Kind::And, Kind::Top, Kind::Bot, absorbed);
  if (absorbed) return bot();
  if (kids.empty()) return top();
  if (kids.size() == 1) return kids.front();
  return Formula(std::make_shared<const Node>(Node{Kind::And, std::nullopt, std::move(kids)}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  bool absorbed = false;
  auto kids = flatten(std::move(parts), Kind::Or, Kind::Bot, Kind::Top, absorbed);
  if (absorbed) return top();
  if (kids.empty()) return bot();
  if (kids.size() == 1) return kids.front();
  return Formula(std::make_shared<const Node>(Node{Kind::Or, std::nullopt, std::move(kids)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (!node_->atom) throw Error(Errc::InvalidArgument, "formula is not an atom");
  return *node_->atom;
}

const std::vector<Formula>& Formula::children() const { return node_->kids; }

bool Formula::is_positive() const {
  if (kind() == Kind::Not) return false;
  return std::all_of(children().begin(), children().end(),
                     [](const Formula& k) { return k.is_positive(); });
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Atom) return a.atom() == b.atom();
  return a.children() == b.children();
}

EqFormula::EqFormula(Formula f) : f_(std::move(f)) {
  if (!f_.is_positive())
    throw Error(Errc::NegationNotAllowed, "negation is not allowed in an equational formula");
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    out.insert(f.atom());
    return;
  }
  for (const auto& k : f.children()) collect_atoms(k, out);
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

int max_var(const Formula& f) {
  int m = -1;
  for (const auto& a : atoms_of(f))
    for (const auto& s : a.args())
      if (s.is_var()) m = std::max(m, s.var_index());
  return m;
}

Formula substitute(const Formula& f, std::span<const Slot> map) {
  auto image = [&](const Slot& s) -> const Slot& {
    if (!s.is_var()) return s;
    if (s.var_index() < 0 || static_cast<std::size_t>(s.var_index()) >= map.size())
      throw Error(Errc::InvalidArgument,
                  "substitution is not defined on variable " + std::to_string(s.var_index()));
    return map[static_cast<std::size_t>(s.var_index())];
  };
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Atom: {
      const Atom& a = f.atom();
      if (a.is_equality()) return Formula::equals(image(a.args()[0]), image(a.args()[1]));
      std::vector<Slot> args;
      args.reserve(a.args().size());
      for (const auto& s : a.args()) args.push_back(image(s));
      return Formula::atom(Atom::relation(a.relation_name(), std::move(args)));
    }
    case Formula::Kind::Not:
      return Formula::negate(substitute(f.children().front(), map));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f.children()) kids.push_back(substitute(k, map));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                            : Formula::disj(std::move(kids));
    }
  }
  return f;
}

EqFormula substitute(const EqFormula& f, std::span<const Slot> map) {
  return EqFormula(substitute(f.formula(), map));
}

}  // namespace ktypes::logic
