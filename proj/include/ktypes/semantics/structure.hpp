#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ktypes/bitvec.hpp"
#include "ktypes/dsl/theory.hpp"
#include "ktypes/logic/signature.hpp"

namespace ktypes::semantics {

/// Finite relational structure. Elements are 0..size()-1 with distinct
/// names; equality is identity on element ids. Relation i is stored as a
/// table of size^arity bits indexed in row-major order.
class FiniteStructure {
 public:
  FiniteStructure() = default;
  /// All relations empty. Throws DuplicateName on repeated element names.
  FiniteStructure(logic::Signature sig, std::vector<std::string> names);

  /// Throws UnknownRelation, UnknownElement, ArityError.
  static FiniteStructure from_doc(const dsl::StructureDoc& doc, const logic::Signature& sig);
  dsl::StructureDoc to_doc() const;

  const logic::Signature& signature() const { return sig_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int e) const { return names_[static_cast<std::size_t>(e)]; }
  std::optional<int> element(std::string_view name) const;

  std::size_t tuple_index(std::span<const int> tuple) const;
  bool holds(std::size_t rel, std::span<const int> tuple) const;
  bool holds_index(std::size_t rel, std::size_t index) const { return tables_[rel].test(index); }
  void set(std::size_t rel, std::span<const int> tuple, bool value = true);
  void set_index(std::size_t rel, std::size_t index, bool value) { tables_[rel].set(index, value); }
  const BitVec& table(std::size_t rel) const { return tables_[rel]; }

  /// Tuples of relation `rel` that hold, in index order.
  std::vector<std::vector<int>> tuples(std::size_t rel) const;

  /// Substructure induced on `elements` (renumbered in the given order).
  FiniteStructure induced(std::span<const int> elements) const;
  /// Same relations, elements permuted: element e becomes perm[e].
  FiniteStructure permuted(std::span<const int> perm) const;

  /// True iff every element name of `sub` occurs here and the relations
  /// agree on those elements (sub is an induced substructure by name).
  bool contains_induced(const FiniteStructure& sub) const;

  friend bool operator==(const FiniteStructure&, const FiniteStructure&) = default;

 private:
  logic::Signature sig_;
  std::vector<std::string> names_;
  std::vector<BitVec> tables_;
};

/// Decodes a table index back into a tuple of the given arity.
std::vector<int> decode_tuple(std::size_t index, int arity, std::size_t n);

/// Element names used for enumerated structures: a, b, c, ... (skipping the
/// variable-like letters x, y, z).
std::string element_name(std::size_t i);

}  // namespace ktypes::semantics
