#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ktypes::logic {

/// Name of the built-in equality relation. It never appears in a Signature's
/// relation list but every signature implicitly contains it with arity 2.
inline constexpr std::string_view kEquality = "=";

struct Relation {
  std::string name;
  int arity = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite relational signature. No function symbols and no constants.
class Signature {
 public:
  Signature() = default;
  /// Throws DuplicateName for repeated names, ArityError for arity < 1 and
  /// InvalidArgument when "=" is declared explicitly.
  explicit Signature(std::vector<Relation> relations);

  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }

  /// Index into relations(), or nullopt.
  std::optional<std::size_t> find(std::string_view name) const;
  std::optional<int> arity(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Relation> relations_;
};

}  // namespace ktypes::logic
