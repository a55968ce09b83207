#include "ktypes/types/amalgam.hpp"

#include <algorithm>
#include <set>

#include "ktypes/error.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::types {

using semantics::CompletionProblem;
using semantics::FiniteStructure;

namespace {

// Partial injections from N \ A into M \ A, as target index or -1, ordered
// by the number of identifications and then lexicographically.
std::vector<std::vector<int>> identifications(std::size_t from, std::size_t to) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(from, -1);
  auto rec = [&](auto&& self, std::size_t i, std::vector<bool>& used) -> void {
    if (i == from) {
      out.push_back(cur);
      return;
    }
    for (int t = -1; t < static_cast<int>(to); ++t) {
      if (t >= 0 && used[static_cast<std::size_t>(t)]) continue;
      cur[i] = t;
      if (t >= 0) used[static_cast<std::size_t>(t)] = true;
      self(self, i + 1, used);
      if (t >= 0) used[static_cast<std::size_t>(t)] = false;
    }
    cur[i] = -1;
  };
  std::vector<bool> used(to, false);
  rec(rec, 0, used);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    auto cnt = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int t) { return t >= 0; }); };
    return cnt(x) < cnt(y);
  });
  return out;
}

}  // namespace

AmalgamResult amalgamate(const dsl::TheorySpec& theory, const FiniteStructure& a, const FiniteStructure& m,
                         const FiniteStructure& n, std::size_t slack) {
  if (!m.contains_induced(a)) throw Error(Errc::NotASubstructure, "A is not an induced substructure of M");
  if (!n.contains_induced(a)) throw Error(Errc::NotASubstructure, "A is not an induced substructure of N");
  if (!semantics::is_model(m, theory)) throw Error(Errc::NotAModel, "M is not a model of " + theory.name);
  if (!semantics::is_model(n, theory)) throw Error(Errc::NotAModel, "N is not a model of " + theory.name);

  const auto& sig = theory.signature;
  std::vector<int> m_rest, n_rest;  // element ids outside A
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!a.element(m.names()[i])) m_rest.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < n.size(); ++i)
    if (!a.element(n.names()[i])) n_rest.push_back(static_cast<int>(i));

  AmalgamResult result;
  result.size_bound = m.size() + n.size() - a.size() + slack;

  std::set<std::string> taken(a.names().begin(), a.names().end());
  for (int e : m_rest) taken.insert(m.names()[static_cast<std::size_t>(e)]);
  auto fresh = [&](std::string base) {
    std::string name = base;
    for (int k = 2; taken.count(name); ++k) name = base + std::to_string(k);
    taken.insert(name);
    return name;
  };
  std::vector<std::string> n_names;
  for (int e : n_rest) n_names.push_back(fresh(n.names()[static_cast<std::size_t>(e)]));
  std::vector<std::string> slack_names;
  for (std::size_t k = 0; k < slack; ++k) slack_names.push_back(fresh("s" + std::to_string(k + 1)));

  for (const auto& ident : identifications(n_rest.size(), m_rest.size())) {
    for (std::size_t extra = 0; extra <= slack; ++extra) {
      // Universe: A, M \ A, the unidentified part of N \ A, extra elements.
      std::vector<std::string> names = a.names();
      std::vector<int> embed_m(m.size()), embed_n(n.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        embed_m[static_cast<std::size_t>(*m.element(a.names()[i]))] = static_cast<int>(i);
        embed_n[static_cast<std::size_t>(*n.element(a.names()[i]))] = static_cast<int>(i);
      }
      for (int e : m_rest) {
        embed_m[static_cast<std::size_t>(e)] = static_cast<int>(names.size());
        names.push_back(m.names()[static_cast<std::size_t>(e)]);
      }
      for (std::size_t k = 0; k < n_rest.size(); ++k) {
        const auto e = static_cast<std::size_t>(n_rest[k]);
        if (ident[k] >= 0) {
          embed_n[e] = embed_m[static_cast<std::size_t>(m_rest[static_cast<std::size_t>(ident[k])])];
        } else {
          embed_n[e] = static_cast<int>(names.size());
          names.push_back(n_names[k]);
        }
      }
      for (std::size_t k = 0; k < extra; ++k) names.push_back(slack_names[k]);

      AmalgamAttempt attempt;
      attempt.extra = extra;
      for (std::size_t k = 0; k < n_rest.size(); ++k)
        if (ident[k] >= 0)
          attempt.identified.emplace_back(n.names()[static_cast<std::size_t>(n_rest[k])],
                                          m.names()[static_cast<std::size_t>(m_rest[static_cast<std::size_t>(ident[k])])]);
      auto record = [&](std::string outcome) {
        ++result.rejected;
        if (result.attempts.size() >= AmalgamResult::kMaxAttempts) return;
        attempt.outcome = std::move(outcome);
        result.attempts.push_back(attempt);
      };

      FiniteStructure base(sig, names);
      std::vector<BitVec> fixed;
      bool clash = false;
      std::string clash_at;
      for (std::size_t r = 0; r < sig.size() && !clash; ++r) {
        const int arity = sig.relations()[r].arity;
        BitVec mask(base.table(r).size());
        // Fix M's tuples, then N's; an identification may make them disagree.
        for (const auto* side : {&m, &n}) {
          const auto& embed = side == &m ? embed_m : embed_n;
          const std::size_t total = side->table(r).size();
          for (std::size_t idx = 0; idx < total; ++idx) {
            auto t = semantics::decode_tuple(idx, arity, side->size());
            std::vector<int> image;
            for (int e : t) image.push_back(embed[static_cast<std::size_t>(e)]);
            const std::size_t j = base.tuple_index(image);
            const bool v = side->holds_index(r, idx);
            if (mask.test(j) && base.holds_index(r, j) != v && !clash) {
              clash = true;
              clash_at = sig.relations()[r].name + "(";
              for (std::size_t q = 0; q < image.size(); ++q)
                clash_at += (q ? "," : "") + names[static_cast<std::size_t>(image[q])];
              clash_at += ")";
            }
            mask.set(j);
            base.set_index(r, j, v);
          }
        }
        fixed.push_back(std::move(mask));
      }
      if (clash) {
        record("clash at " + clash_at);
        continue;
      }
      ++result.candidates;
      CompletionProblem problem(theory, base, fixed);
      if (auto c = semantics::first_completion(problem)) {
        result.amalgam = Amalgam{problem.materialize(*c), embed_m, embed_n};
        return result;
      }
      record("no completion");
    }
  }
  return result;
}

}  // namespace ktypes::types
