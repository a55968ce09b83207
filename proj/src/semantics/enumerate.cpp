#include "ktypes/semantics/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ktypes/error.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::semantics {

namespace {

std::string encode(const FiniteStructure& s) {
  std::string out;
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    const BitVec& t = s.table(r);
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.test(i) ? '1' : '0');
    out.push_back('|');
  }
  return out;
}

}  // namespace

std::string canonical_key(const FiniteStructure& s, std::size_t fixed) {
  std::vector<int> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string k = encode(s.permuted(perm));
    if (first || k < best) best = std::move(k);
    first = false;
  } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(std::min(fixed, perm.size())),
                                 perm.end()));
  return best;
}

std::vector<FiniteStructure> extensions(const dsl::TheorySpec& theory, const FiniteStructure& a,
                                        std::size_t size, const SearchOptions& opts) {
  if (size < a.size()) return {};
  std::vector<std::string> names = a.names();
  for (std::size_t i = 0; names.size() < size; ++i) {
    std::string n = element_name(i);
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(std::move(n));
  }
  FiniteStructure base(a.signature(), names);
  for (std::size_t r = 0; r < a.signature().size(); ++r)
    for (const auto& t : a.tuples(r)) base.set(r, t);
  CompletionProblem problem = CompletionProblem::with_fixed_prefix(theory, base, a.size());
  std::vector<FiniteStructure> out;
  std::set<std::string> seen;
  for (const auto& c : enumerate_completions(problem, opts)) {
    FiniteStructure s = problem.materialize(c);
    if (seen.insert(canonical_key(s, a.size())).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<FiniteStructure> models_up_to_iso(const dsl::TheorySpec& theory, std::size_t n,
                                              const SearchOptions& opts) {
  return extensions(theory, FiniteStructure(theory.signature, {}), n, opts);
}

}  // namespace ktypes::semantics
