#include "brute.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

using ktypes::logic::Atom;
using ktypes::logic::Formula;
using ktypes::logic::Slot;

bool Tables::holds(std::size_t r, const std::vector<int>& t) const {
  std::size_t idx = 0;
  for (int e : t) idx = idx * n + static_cast<std::size_t>(e);
  return rel[r][idx] != 0;
}

Tables from_structure(const ktypes::semantics::FiniteStructure& s) {
  Tables t;
  t.n = s.size();
  t.names = s.names();
  for (const auto& r : s.signature().relations()) t.arity.push_back(r.arity);
  for (std::size_t r = 0; r < t.arity.size(); ++r) {
    std::size_t cells = 1;
    for (int k = 0; k < t.arity[r]; ++k) cells *= t.n;
    t.rel.emplace_back(cells, 0);
    for (const auto& tup : s.tuples(r)) {
      std::size_t idx = 0;
      for (int e : tup) idx = idx * t.n + static_cast<std::size_t>(e);
      t.rel[r][idx] = 1;
    }
  }
  return t;
}

std::string fresh_name(const Tables&, std::size_t i) { return "_" + std::to_string(i); }

namespace {

int resolve(const Tables& s, const Slot& slot, const std::vector<int>& env) {
  if (slot.is_var()) return env.at(static_cast<std::size_t>(slot.var_index()));
  auto it = std::find(s.names.begin(), s.names.end(), slot.param_name());
  if (it == s.names.end()) throw std::invalid_argument("oracle: unknown parameter " + slot.param_name());
  return static_cast<int>(it - s.names.begin());
}

// Relation index by name; the oracle keeps its own lookup via the theory.
thread_local const ktypes::dsl::TheorySpec* current_theory = nullptr;

std::size_t relation_index(const std::string& name) {
  const auto& rels = current_theory->signature.relations();
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels[i].name == name) return i;
  throw std::invalid_argument("oracle: unknown relation " + name);
}

bool eval_atom(const Tables& s, const Atom& a, const std::vector<int>& env) {
  std::vector<int> args;
  for (const auto& slot : a.args()) args.push_back(resolve(s, slot, env));
  if (a.is_equality()) return args[0] == args[1];
  return s.holds(relation_index(a.relation_name()), args);
}

}  // namespace

bool eval(const Tables& s, const Formula& f, const std::vector<int>& env) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bot: return false;
    case Formula::Kind::Atom: return eval_atom(s, f.atom(), env);
    case Formula::Kind::Not: return !eval(s, f.children()[0], env);
    case Formula::Kind::And:
      for (const auto& c : f.children())
        if (!eval(s, c, env)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children())
        if (eval(s, c, env)) return true;
      return false;
  }
  return false;
}

namespace {

// Calls f(env) for every env in n^k.
template <class F>
bool all_tuples(std::size_t n, std::size_t k, F&& f) {
  std::vector<int> env(k, 0);
  if (n == 0) return k == 0 ? f(env) : true;
  while (true) {
    if (!f(env)) return false;
    std::size_t i = 0;
    while (i < k && static_cast<std::size_t>(++env[i]) == n) env[i++] = 0;
    if (i == k) return true;
  }
}

}  // namespace

bool is_model(const Tables& s, const ktypes::dsl::TheorySpec& t) {
  current_theory = &t;
  for (const auto& ax : t.axioms) {
    const bool ok = all_tuples(s.n, ax.bound.size(), [&](const std::vector<int>& env) { return eval(s, ax.matrix, env); });
    if (!ok) return false;
  }
  return true;
}

std::set<std::vector<char>> realized_diagrams(const ktypes::dsl::TheorySpec& t,
                                              const ktypes::semantics::FiniteStructure& a, int vars,
                                              const std::vector<Atom>& universe, std::size_t max_size) {
  const Tables base = from_structure(a);
  std::set<std::vector<char>> out;
  for (std::size_t size = a.size(); size <= max_size; ++size) {
    for_each_extension(t, base, size, [&](const Tables& m) {
      current_theory = &t;
      all_tuples(m.n, static_cast<std::size_t>(vars), [&](const std::vector<int>& env) {
        std::vector<char> d;
        for (const auto& atom : universe) d.push_back(eval_atom(m, atom, env) ? 1 : 0);
        out.insert(std::move(d));
        return true;
      });
    });
  }
  return out;
}

bool entails(const ktypes::dsl::TheorySpec& t, const ktypes::semantics::FiniteStructure& a, int vars,
             const std::vector<Formula>& premises, const Formula& conclusion, std::size_t max_size) {
  const Tables base = from_structure(a);
  bool holds = true;
  for (std::size_t size = a.size(); size <= max_size && holds; ++size) {
    for_each_extension(t, base, size, [&](const Tables& m) {
      if (!holds) return;
      current_theory = &t;
      all_tuples(m.n, static_cast<std::size_t>(vars), [&](const std::vector<int>& env) {
        for (const auto& p : premises)
          if (!eval(m, p, env)) return true;
        if (!eval(m, conclusion, env)) holds = false;
        return holds;
      });
    });
  }
  return holds;
}

unsigned long long labelled_tournament_unions(int n) {
  // u(n) = sum over the size k of the block containing element 0:
  //        C(n-1, k-1) * 2^C(k,2) * u(n-k)
  std::vector<unsigned long long> u(static_cast<std::size_t>(n) + 1, 0);
  u[0] = 1;
  auto binom = [](int a, int b) {
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
    return r;
  };
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k)
      u[static_cast<std::size_t>(m)] += binom(m - 1, k - 1) * (1ull << (k * (k - 1) / 2)) * u[static_cast<std::size_t>(m - k)];
  return u[static_cast<std::size_t>(n)];
}

unsigned long long unlabelled_tournament_unions(int n) {
  // Unlabelled tournaments on k vertices, k = 0..6 (OEIS A000568).
  static const unsigned long long tournaments[] = {1, 1, 1, 2, 4, 12, 56};
  if (n < 0 || n > 6) throw std::out_of_range("oracle: n out of range");
  // Euler transform: multisets of tournaments with total size n.
  std::vector<unsigned long long> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int k = 1; k <= n; ++k) {
    // Multiply by (1 - q^k)^(-t_k) via repeated geometric series.
    for (unsigned long long c = 0; c < tournaments[k]; ++c)
      for (int m = k; m <= n; ++m) a[static_cast<std::size_t>(m)] += a[static_cast<std::size_t>(m - k)];
  }
  return a[static_cast<std::size_t>(n)];
}

}  // namespace oracle
