#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ktypes/bitvec.hpp"
#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::semantics {

/// A relation tuple whose truth value is left open.
struct FreeTuple {
  std::size_t relation;
  std::size_t index;  // table index in the base structure
  std::vector<int> tuple;
};

/// A finite universe where some relation tuples are fixed (taken from the
/// base structure) and the rest are free, together with the axioms of a
/// universal theory grounded over that universe. A completion assigns every
/// free tuple; it is valid when the completed structure is a model.
///
/// Free tuples are ordered by their largest element, so axiom instances over
/// small element sets are decided early in a depth-first search.
class CompletionProblem {
 public:
  /// `fixed[r]` marks the table indices of relation r whose value is taken
  /// from `base`.
  CompletionProblem(const dsl::TheorySpec& theory, FiniteStructure base, std::vector<BitVec> fixed);

  /// Tuples entirely inside elements [0, k) are fixed, all others free.
  static CompletionProblem with_fixed_prefix(const dsl::TheorySpec& theory, FiniteStructure base,
                                             std::size_t k);

  const FiniteStructure& base() const { return base_; }
  const std::vector<FreeTuple>& free_tuples() const { return free_; }
  std::size_t free_count() const { return free_.size(); }
  /// Some axiom instance is already false on the fixed part.
  bool infeasible() const { return infeasible_; }

  FiniteStructure materialize(const BitVec& assignment) const;

  // Search internals, used by the kernels.
  struct Node {
    enum class Op : unsigned char { Bit, Not, And, Or } op;
    std::size_t bit = 0;
    std::vector<Node> kids;
  };
  /// Ground axiom instances that become decided when free tuple i is
  /// assigned (i is the largest free tuple they mention).
  const std::vector<std::vector<Node>>& triggers() const { return triggers_; }
  static bool eval(const Node& n, const std::vector<unsigned char>& values);

  const dsl::TheorySpec& theory() const { return *theory_; }

 private:
  void ground();

  const dsl::TheorySpec* theory_;
  FiniteStructure base_;
  std::vector<BitVec> fixed_;
  std::vector<FreeTuple> free_;
  // (relation, table index) -> free position, or npos for fixed tuples.
  std::vector<std::vector<std::size_t>> free_pos_;
  std::vector<std::vector<Node>> triggers_;
  bool infeasible_ = false;
};

struct SearchOptions {
  /// Run the top-level branches of the search on an OpenMP team.
  bool parallel = true;
  /// Number of leading free tuples whose assignments are split across workers.
  std::size_t split_depth = 10;
  /// Hard cap on the number of completions; exceeding it throws LimitExceeded.
  std::size_t max_results = 4'000'000;
};

/// All valid completions in lexicographic order of the assignment
/// (free tuple 0 most significant, false before true). Depth-first search
/// with pruning at trigger points; with `parallel` the first split_depth
/// levels are distributed and the per-branch results concatenated in branch
/// order, so the output is independent of scheduling.
std::vector<BitVec> enumerate_completions(const CompletionProblem& p, const SearchOptions& opts = {});

/// Serial reference: every one of the 2^free assignments is materialized and
/// checked with is_model. Same order as enumerate_completions. Throws
/// LimitExceeded beyond 24 free tuples.
std::vector<BitVec> enumerate_completions_reference(const CompletionProblem& p);

/// The lexicographically first valid completion, if any.
std::optional<BitVec> first_completion(const CompletionProblem& p);

}  // namespace ktypes::semantics
