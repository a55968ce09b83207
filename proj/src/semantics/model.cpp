#include "ktypes/semantics/model.hpp"

#include "ktypes/error.hpp"

namespace ktypes::semantics {

namespace {

int resolve(const FiniteStructure& s, const logic::Slot& slot, std::span<const int> assignment) {
  if (slot.is_var()) return assignment[static_cast<std::size_t>(slot.var_index())];
  auto e = s.element(slot.param_name());
  if (!e) throw Error(Errc::UnknownElement, "structure has no element '" + slot.param_name() + "'");
  return *e;
}

}  // namespace

bool holds_in(const FiniteStructure& s, const logic::Formula& f, std::span<const int> assignment) {
  using K = logic::Formula::Kind;
  switch (f.kind()) {
    case K::Top: return true;
    case K::Bot: return false;
    case K::Atom: {
      const auto& a = f.atom();
      std::vector<int> ids;
      for (const auto& slot : a.args()) ids.push_back(resolve(s, slot, assignment));
      if (a.is_equality()) return ids[0] == ids[1];
      auto ri = s.signature().find(a.relation_name());
      if (!ri) throw Error(Errc::UnknownRelation, "unknown relation '" + a.relation_name() + "'");
      return s.holds(*ri, ids);
    }
    case K::Not: return !holds_in(s, f.children().front(), assignment);
    case K::And:
      for (const auto& k : f.children())
        if (!holds_in(s, k, assignment)) return false;
      return true;
    case K::Or:
      for (const auto& k : f.children())
        if (holds_in(s, k, assignment)) return true;
      return false;
  }
  return false;
}

bool is_model(const FiniteStructure& s, const dsl::TheorySpec& t) {
  if (!(s.signature() == t.signature))
    throw Error(Errc::SignatureMismatch, "structure signature differs from theory '" + t.name + "'");
  const int n = static_cast<int>(s.size());
  for (const auto& ax : t.axioms) {
    const std::size_t k = ax.bound.size();
    if (k > 0 && n == 0) continue;  // vacuous
    std::vector<int> assignment(k, 0);
    while (true) {
      if (!holds_in(s, ax.matrix, assignment)) return false;
      std::size_t pos = k;
      while (pos > 0 && ++assignment[pos - 1] == n) assignment[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return true;
}

}  // namespace ktypes::semantics
