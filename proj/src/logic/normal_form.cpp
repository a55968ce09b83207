#include "ktypes/logic/normal_form.hpp"

#include <algorithm>

namespace ktypes::logic {

namespace {

using Term = std::vector<Atom>;

bool subset(const Term& a, const Term& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Drops duplicates and non-minimal terms, then sorts.
std::vector<Term> minimize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<Term> kept;
  for (auto& t : terms) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Term& k) { return subset(k, t); });
    if (!dominated) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Term> dnf_of(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top: return {Term{}};
    case Formula::Kind::Bot: return {};
    case Formula::Kind::Atom: return {Term{f.atom()}};
    case Formula::Kind::Or: {
      std::vector<Term> all;
      for (const auto& k : f.children())
        for (auto& t : dnf_of(k)) all.push_back(std::move(t));
      return minimize(std::move(all));
    }
    case Formula::Kind::And: {
      std::vector<Term> acc{Term{}};
      for (const auto& k : f.children()) {
        auto rhs = dnf_of(k);
        std::vector<Term> next;
        for (const auto& a : acc)
          for (const auto& b : rhs) {
            Term u;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            next.push_back(std::move(u));
          }
        acc = minimize(std::move(next));
      }
      return acc;
    }
    case Formula::Kind::Not: break;  // excluded by EqFormula
  }
  return {};
}

}  // namespace

AntichainDnf antichain_dnf(const EqFormula& f) { return {dnf_of(f.formula())}; }

EqFormula from_dnf(const AntichainDnf& dnf) {
  std::vector<Formula> disjuncts;
  for (const auto& term : dnf.terms) {
    std::vector<Formula> conjuncts;
    for (const auto& a : term) conjuncts.push_back(Formula::atom(a));
    disjuncts.push_back(Formula::conj(std::move(conjuncts)));
  }
  return EqFormula(Formula::disj(std::move(disjuncts)));
}

EqFormula normal_form(const EqFormula& f) { return from_dnf(antichain_dnf(f)); }

}  // namespace ktypes::logic
