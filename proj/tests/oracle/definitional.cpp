#include "definitional.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "brute.hpp"
#include "ktypes/semantics/context.hpp"
#include "ktypes/types/eq_type.hpp"

namespace oracle {

using ktypes::logic::Atom;
using ktypes::logic::EqFormula;
using ktypes::logic::Formula;

namespace {

// Membership over the points, one bit per point.
class Set {
 public:
  Set() = default;
  explicit Set(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= bit;
    else words_[i / 64] &= ~bit;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool operator==(const Set& o) const { return words_ == o.words_; }
  // a ⊆ b
  friend bool subset(const Set& a, const Set& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & ~b.words_[k]) return false;
    return true;
  }
  friend bool intersects(const Set& a, const Set& b) {
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & b.words_[k]) return true;
    return false;
  }
  // a ⊆ b ∪ c
  friend bool covered(const Set& a, const Set& b, const Set& c) {
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & ~b.words_[k] & ~c.words_[k]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

bool point_leq(const std::vector<char>& p, const std::vector<char>& q) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] && !q[i]) return false;
  return true;
}

bool eval_point(const Formula& f, const std::map<Atom, std::size_t>& index, const std::vector<char>& point) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return point[index.at(f.atom())] != 0;
    case Formula::Kind::Not: return !eval_point(f.children()[0], index, point);
    case Formula::Kind::And:
      for (const auto& c : f.children())
        if (!eval_point(c, index, point)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children())
        if (eval_point(c, index, point)) return true;
      return false;
  }
  return false;
}

// Up-sets of the point order, by including or excluding points in a linear
// extension order (smallest first); stops past `cap`.
void upsets(const std::vector<std::vector<char>>& pts, std::size_t cap, std::vector<Set>& out, bool& overflow) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::count(pts[x].begin(), pts[x].end(), 1) < std::count(pts[y].begin(), pts[y].end(), 1);
  });
  Set cur(n);
  // Processing points from the top down: a point may be left out only if no
  // point below it is in. Equivalently, from the bottom up: once a point is
  // in, everything above it must be in.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (overflow) return;
    if (k == n) {
      out.push_back(cur);
      if (out.size() > cap) overflow = true;
      return;
    }
    const std::size_t p = order[k];
    // Forced in when some smaller point is in.
    bool forced = false;
    for (std::size_t q = 0; q < n && !forced; ++q)
      if (q != p && cur[q] && point_leq(pts[q], pts[p])) forced = true;
    if (!forced) rec(k + 1);
    cur.set(p);
    rec(k + 1);
    cur.set(p, false);
  };
  rec(0);
}

EqFormula canonical(const std::vector<std::vector<char>>& pts, const std::vector<Atom>& universe, const Set& u) {
  std::vector<Formula> disj;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!u.test(i)) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < pts.size() && minimal; ++j)
      if (j != i && u.test(j) && point_leq(pts[j], pts[i])) minimal = false;
    if (!minimal) continue;
    std::vector<Formula> conj;
    for (std::size_t a = 0; a < universe.size(); ++a)
      if (pts[i][a]) conj.push_back(Formula::atom(universe[a]));
    disj.push_back(Formula::conj(std::move(conj)));
  }
  return EqFormula(Formula::disj(std::move(disj)));
}

}  // namespace

CrossReport cross_validate(const ktypes::dsl::TheorySpec& t, const ktypes::semantics::FiniteStructure& a, int vars,
                           std::size_t full_family_cap) {
  CrossReport r;
  auto ctx = ktypes::semantics::make_context(t, a, vars);
  const auto& universe = ctx->universe();
  std::map<Atom, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);

  const auto realized = realized_diagrams(t, a, vars, universe, a.size() + static_cast<std::size_t>(vars));
  const std::vector<std::vector<char>> pts(realized.begin(), realized.end());
  const std::size_t n = pts.size();
  r.points = n;
  auto flag = [&](std::string msg) {
    ++r.discrepancies;
    if (r.details.size() < 10) r.details.push_back(std::move(msg));
  };
  if (n != ctx->size()) flag("diagram count " + std::to_string(ctx->size()) + " vs realized " + std::to_string(n));

  // Test family of truth sets.
  std::vector<Set> family;
  bool overflow = false;
  upsets(pts, full_family_cap, family, overflow);
  r.full_family = !overflow;
  if (overflow) {
    family.clear();
    Set full(n);
    for (std::size_t v = 0; v < n; ++v) full.set(v);
    family.push_back(Set(n));
    family.push_back(full);
    for (std::size_t w = 0; w < n; ++w) {
      Set up(n), co(n);
      for (std::size_t v = 0; v < n; ++v) {
        up.set(v, point_leq(pts[w], pts[v]));
        co.set(v, !point_leq(pts[v], pts[w]));
      }
      family.push_back(up);
      family.push_back(co);
    }
  }
  r.families = family.size();

  // Truth sets recomputed from the canonical formulas, by evaluation.
  std::vector<EqFormula> formulas;
  std::vector<Set> truth;
  for (const auto& u : family) {
    formulas.push_back(canonical(pts, universe, u));
    Set s(n);
    for (std::size_t v = 0; v < n; ++v) s.set(v, eval_point(formulas.back().formula(), index, pts[v]));
    if (!(s == u)) flag("canonical formula does not define its up-set");
    truth.push_back(std::move(s));
  }

  for (std::size_t k = 0; k < family.size(); ++k) {
    const Set& p = truth[k];
    const bool consistent = p.any();
    const bool trivial = p.count() == n;
    bool maximal = consistent, prime = consistent;
    for (std::size_t i = 0; i < family.size() && maximal; ++i)
      if (!subset(p, truth[i]) && intersects(p, truth[i])) maximal = false;
    for (std::size_t i = 0; i < family.size() && prime; ++i) {
      if (subset(p, truth[i])) continue;
      for (std::size_t j = i; j < family.size() && prime; ++j)
        if (!subset(p, truth[j]) && covered(p, truth[i], truth[j])) prime = false;
    }
    const ktypes::types::EqType q(ctx, {formulas[k]});
    const auto c = ktypes::types::classify(q);
    ++r.types_checked;
    const std::string name = ctx->render(formulas[k].formula());
    if (c.consistent != consistent) flag("consistent differs on " + name);
    if (c.trivial != trivial) flag("trivial differs on " + name);
    if (c.prime != prime) flag("prime differs on " + name);
    if (c.maximal != maximal) flag("maximal differs on " + name);
  }

  // Entailment order between prime types of points.
  std::vector<std::size_t> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    ktypes::BitVec bits(universe.size());
    for (std::size_t k = 0; k < universe.size(); ++k) bits.set(k, pts[i][k] != 0);
    const auto d = ctx->find_diagram(bits);
    if (!d) {
      flag("realized point missing from the context");
      return r;
    }
    diag[i] = *d;
  }
  std::vector<Set> conj_truth(n, Set(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Formula> conj;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (pts[i][k]) conj.push_back(Formula::atom(universe[k]));
    const Formula f = Formula::conj(std::move(conj));
    for (std::size_t v = 0; v < n; ++v) conj_truth[i].set(v, eval_point(f, index, pts[v]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = ktypes::types::EqType::of_diagram(ctx, diag[i]);
    for (std::size_t j = 0; j < n; ++j) {
      ++r.order_pairs;
      const bool definitional = subset(conj_truth[i], conj_truth[j]);
      const bool inclusion = point_leq(pts[j], pts[i]);
      const bool fast = pi.entails(ktypes::types::EqType::of_diagram(ctx, diag[j]));
      if (definitional != inclusion || fast != definitional)
        flag("order differs between " + ctx->render_atoms(ctx->diagrams()[diag[i]].atoms) + " and " +
             ctx->render_atoms(ctx->diagrams()[diag[j]].atoms));
    }
  }
  return r;
}

}  // namespace oracle
