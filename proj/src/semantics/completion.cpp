#include "ktypes/semantics/completion.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ktypes/error.hpp"
#include "ktypes/semantics/model.hpp"

namespace ktypes::semantics {

namespace {

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

// Result of grounding a formula: a constant or a node over free bits.
struct Ground {
  std::optional<bool> constant;
  CompletionProblem::Node node;
  std::size_t max_bit = 0;
};

}  // namespace

CompletionProblem::CompletionProblem(const dsl::TheorySpec& theory, FiniteStructure base,
                                     std::vector<BitVec> fixed)
    : theory_(&theory), base_(std::move(base)), fixed_(std::move(fixed)) {
  if (!(base_.signature() == theory.signature))
    throw Error(Errc::SignatureMismatch, "structure signature differs from theory '" + theory.name + "'");
  const auto& rels = base_.signature().relations();
  const std::size_t n = base_.size();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    free_pos_.emplace_back(base_.table(r).size(), kNpos);
    for (std::size_t i = 0; i < base_.table(r).size(); ++i)
      if (!fixed_[r].test(i)) free_.push_back({r, i, decode_tuple(i, rels[r].arity, n)});
  }
  std::stable_sort(free_.begin(), free_.end(), [](const FreeTuple& a, const FreeTuple& b) {
    const int ma = *std::max_element(a.tuple.begin(), a.tuple.end());
    const int mb = *std::max_element(b.tuple.begin(), b.tuple.end());
    if (ma != mb) return ma < mb;
    if (a.relation != b.relation) return a.relation < b.relation;
    return a.index < b.index;
  });
  for (std::size_t i = 0; i < free_.size(); ++i) free_pos_[free_[i].relation][free_[i].index] = i;
  ground();
}

CompletionProblem CompletionProblem::with_fixed_prefix(const dsl::TheorySpec& theory,
                                                       FiniteStructure base, std::size_t k) {
  std::vector<BitVec> fixed;
  const std::size_t n = base.size();
  for (const auto& rel : base.signature().relations()) {
    BitVec mask(base.table(fixed.size()).size());
    for (std::size_t i = 0; i < mask.size(); ++i) {
      auto t = decode_tuple(i, rel.arity, n);
      mask.set(i, std::all_of(t.begin(), t.end(), [k](int e) { return static_cast<std::size_t>(e) < k; }));
    }
    fixed.push_back(std::move(mask));
  }
  return CompletionProblem(theory, std::move(base), std::move(fixed));
}

void CompletionProblem::ground() {
  triggers_.assign(free_.size(), {});
  const int n = static_cast<int>(base_.size());
  using K = logic::Formula::Kind;

  // Grounds f under `assignment`, folding fixed tuples and equalities.
  auto ground_formula = [&](auto&& self, const logic::Formula& f,
                            const std::vector<int>& assignment) -> Ground {
    switch (f.kind()) {
      case K::Top: return {true, {}, 0};
      case K::Bot: return {false, {}, 0};
      case K::Atom: {
        const auto& a = f.atom();
        std::vector<int> ids;
        for (const auto& s : a.args()) ids.push_back(assignment[static_cast<std::size_t>(s.var_index())]);
        if (a.is_equality()) return {ids[0] == ids[1], {}, 0};
        const std::size_t r = *base_.signature().find(a.relation_name());
        const std::size_t idx = base_.tuple_index(ids);
        const std::size_t pos = free_pos_[r][idx];
        if (pos == kNpos) return {base_.holds_index(r, idx), {}, 0};
        return {std::nullopt, Node{Node::Op::Bit, pos, {}}, pos};
      }
      case K::Not: {
        Ground g = self(self, f.children().front(), assignment);
        if (g.constant) return {!*g.constant, {}, 0};
        return {std::nullopt, Node{Node::Op::Not, 0, {std::move(g.node)}}, g.max_bit};
      }
      case K::And:
      case K::Or: {
        const bool is_and = f.kind() == K::And;
        Ground out{std::nullopt, Node{is_and ? Node::Op::And : Node::Op::Or, 0, {}}, 0};
        for (const auto& k : f.children()) {
          Ground g = self(self, k, assignment);
          if (g.constant) {
            if (*g.constant != is_and) return {!is_and, {}, 0};  // absorbing value
            continue;
          }
          out.max_bit = std::max(out.max_bit, g.max_bit);
          out.node.kids.push_back(std::move(g.node));
        }
        if (out.node.kids.empty()) return {is_and, {}, 0};
        if (out.node.kids.size() == 1) {
          Node only = std::move(out.node.kids.front());
          return {std::nullopt, std::move(only), out.max_bit};
        }
        return out;
      }
    }
    return {true, {}, 0};
  };

  for (const auto& ax : theory_->axioms) {
    const std::size_t k = ax.bound.size();
    if (k > 0 && n == 0) continue;
    std::vector<int> assignment(k, 0);
    while (true) {
      Ground g = ground_formula(ground_formula, ax.matrix, assignment);
      if (g.constant) {
        if (!*g.constant) infeasible_ = true;
      } else {
        triggers_[g.max_bit].push_back(std::move(g.node));
      }
      std::size_t pos = k;
      while (pos > 0 && ++assignment[pos - 1] == n) assignment[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

bool CompletionProblem::eval(const Node& n, const std::vector<unsigned char>& values) {
  switch (n.op) {
    case Node::Op::Bit: return values[n.bit] != 0;
    case Node::Op::Not: return !eval(n.kids.front(), values);
    case Node::Op::And:
      for (const auto& k : n.kids)
        if (!eval(k, values)) return false;
      return true;
    case Node::Op::Or:
      for (const auto& k : n.kids)
        if (eval(k, values)) return true;
      return false;
  }
  return false;
}

FiniteStructure CompletionProblem::materialize(const BitVec& assignment) const {
  FiniteStructure s = base_;
  for (std::size_t i = 0; i < free_.size(); ++i)
    s.set_index(free_[i].relation, free_[i].index, assignment.test(i));
  return s;
}

namespace {

bool decided_ok(const CompletionProblem& p, std::size_t bit, const std::vector<unsigned char>& values) {
  for (const auto& inst : p.triggers()[bit])
    if (!CompletionProblem::eval(inst, values)) return false;
  return true;
}

BitVec to_bits(const std::vector<unsigned char>& values) {
  BitVec b(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) b.set(i, values[i] != 0);
  return b;
}

struct Dfs {
  const CompletionProblem& p;
  std::size_t cap;
  std::atomic<std::size_t>& total;
  std::vector<BitVec>& out;
  bool stop_at_first = false;

  // Returns false when the search should stop.
  bool run(std::vector<unsigned char>& values, std::size_t bit) {
    if (bit == values.size()) {
      out.push_back(to_bits(values));
      if (total.fetch_add(1) + 1 > cap)
        throw Error(Errc::LimitExceeded, "completion search exceeded " + std::to_string(cap) + " results");
      return !stop_at_first;
    }
    for (unsigned char v = 0; v < 2; ++v) {
      values[bit] = v;
      if (decided_ok(p, bit, values) && !run(values, bit + 1)) return false;
    }
    values[bit] = 0;
    return true;
  }
};

}  // namespace

std::vector<BitVec> enumerate_completions(const CompletionProblem& p, const SearchOptions& opts) {
  if (p.infeasible()) return {};
  const std::size_t f = p.free_count();
  const std::size_t depth = std::min(f, opts.split_depth);
  const std::size_t branches = std::size_t{1} << depth;
  std::vector<std::vector<BitVec>> per_branch(branches);
  std::atomic<std::size_t> total{0};
  bool failed = false;
  Error first_error(Errc::LimitExceeded, "");

#pragma omp parallel for schedule(dynamic) if (opts.parallel && branches > 1)
  for (long long b = 0; b < static_cast<long long>(branches); ++b) {
    try {
      std::vector<unsigned char> values(f, 0);
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        values[j] = static_cast<unsigned char>((static_cast<std::size_t>(b) >> (depth - 1 - j)) & 1u);
        ok = decided_ok(p, j, values);
      }
      if (ok) {
        Dfs dfs{p, opts.max_results, total, per_branch[static_cast<std::size_t>(b)]};
        dfs.run(values, depth);
      }
    } catch (const Error& e) {
#pragma omp critical(ktypes_completion_error)
      {
        failed = true;
        first_error = e;
      }
    }
  }
  if (failed) throw first_error;

  std::vector<BitVec> out;
  out.reserve(total.load());
  for (auto& v : per_branch)
    for (auto& b : v) out.push_back(std::move(b));
  return out;
}

std::vector<BitVec> enumerate_completions_reference(const CompletionProblem& p) {
  const std::size_t f = p.free_count();
  if (f > 24) throw Error(Errc::LimitExceeded, "reference enumeration limited to 24 free tuples");
  std::vector<BitVec> out;
  const std::size_t total = std::size_t{1} << f;
  for (std::size_t m = 0; m < total; ++m) {
    BitVec b(f);
    for (std::size_t j = 0; j < f; ++j) b.set(j, (m >> (f - 1 - j)) & 1u);
    if (is_model(p.materialize(b), p.theory())) out.push_back(std::move(b));
  }
  return out;
}

std::optional<BitVec> first_completion(const CompletionProblem& p) {
  if (p.infeasible()) return std::nullopt;
  std::vector<BitVec> out;
  std::atomic<std::size_t> total{0};
  Dfs dfs{p, std::numeric_limits<std::size_t>::max(), total, out, true};
  std::vector<unsigned char> values(p.free_count(), 0);
  dfs.run(values, 0);
  if (out.empty()) return std::nullopt;
  return out.front();
}

}  // namespace ktypes::semantics
