#include "ktypes/logic/signature.hpp"

#include <set>

#include "ktypes/error.hpp"

namespace ktypes::logic {

Signature::Signature(std::vector<Relation> relations) : relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (r.name == kEquality)
      throw Error(Errc::InvalidArgument, "relation name '=' is reserved");
    if (r.arity < 1)
      throw Error(Errc::ArityError, "relation '" + r.name + "' must have arity >= 1");
    if (!seen.insert(r.name).second)
      throw Error(Errc::DuplicateName, "relation '" + r.name + "' declared twice");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  return std::nullopt;
}

std::optional<int> Signature::arity(std::string_view name) const {
  if (name == kEquality) return 2;
  if (auto i = find(name)) return relations_[*i].arity;
  return std::nullopt;
}

}  // namespace ktypes::logic
