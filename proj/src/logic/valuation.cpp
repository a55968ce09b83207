#include "ktypes/logic/valuation.hpp"

#include <numeric>

#include "ktypes/error.hpp"

namespace ktypes::logic {

std::vector<Atom> atom_universe(const Signature& sig, int vars,
                                std::span<const std::string> params) {
  std::vector<Slot> slots;
  for (int i = 0; i < vars; ++i) slots.push_back(Slot::var(i));
  for (const auto& p : params) slots.push_back(Slot::param(p));

  std::vector<Atom> out;
  const std::size_t n = slots.size();
  if (n == 0) return out;
  for (const auto& rel : sig.relations()) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(rel.arity), 0);
    while (true) {
      std::vector<Slot> args;
      for (auto i : idx) args.push_back(slots[i]);
      out.push_back(Atom::relation(rel.name, std::move(args)));
      int pos = rel.arity - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == n) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(Atom::equality(slots[i], slots[j]));
  return out;
}

Valuation::Valuation(std::vector<Atom> universe, BitVec truth, Unchecked)
    : universe_(std::move(universe)), truth_(std::move(truth)) {
  if (truth_.size() != universe_.size())
    throw Error(Errc::InvalidArgument, "valuation size does not match its atom universe");
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
}

Valuation::Valuation(std::vector<Atom> universe, BitVec truth)
    : Valuation(std::move(universe), std::move(truth), Unchecked{}) {
  if (!is_congruent())
    throw Error(Errc::InvalidArgument, "valuation violates equality congruence");
}

Valuation Valuation::unconstrained(std::vector<Atom> universe, BitVec truth) {
  return Valuation(std::move(universe), std::move(truth), Unchecked{});
}

bool Valuation::value(const Atom& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw Error(Errc::UnknownAtom, "atom outside the valuation's universe");
  return truth_.test(it->second);
}

bool Valuation::is_congruent() const {
  // Union-find over the slots that occur in the universe.
  std::map<Slot, std::size_t> slot_id;
  for (const auto& a : universe_)
    for (const auto& s : a.args()) slot_id.emplace(s, slot_id.size());
  std::vector<std::size_t> parent(slot_id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const Atom& a = universe_[i];
    if (a.is_equality() && truth_.test(i))
      parent[find(slot_id.at(a.args()[0]))] = find(slot_id.at(a.args()[1]));
  }
  std::map<std::pair<std::string, std::vector<std::size_t>>, bool> seen;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const Atom& a = universe_[i];
    std::vector<std::size_t> key;
    for (const auto& s : a.args()) key.push_back(find(slot_id.at(s)));
    if (a.is_equality()) {
      if (key[0] == key[1] && !truth_.test(i)) return false;
      continue;
    }
    auto [it, fresh] = seen.emplace(std::make_pair(a.relation_name(), key), truth_.test(i));
    if (!fresh && it->second != truth_.test(i)) return false;
  }
  return true;
}

bool eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return v.value(f.atom());
    case Formula::Kind::Not: return !eval(f.children().front(), v);
    case Formula::Kind::And:
      for (const auto& k : f.children())
        if (!eval(k, v)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : f.children())
        if (eval(k, v)) return true;
      return false;
  }
  return false;
}

}  // namespace ktypes::logic
