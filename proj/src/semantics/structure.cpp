#include "ktypes/semantics/structure.hpp"

#include <set>

#include "ktypes/error.hpp"

namespace ktypes::semantics {

namespace {

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

FiniteStructure::FiniteStructure(logic::Signature sig, std::vector<std::string> names)
    : sig_(std::move(sig)), names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw Error(Errc::DuplicateName, "element '" + n + "' declared twice");
  for (const auto& r : sig_.relations()) tables_.emplace_back(power(names_.size(), r.arity));
}

FiniteStructure FiniteStructure::from_doc(const dsl::StructureDoc& doc, const logic::Signature& sig) {
  FiniteStructure s(sig, doc.universe);
  for (const auto& [rel, tuples] : doc.relations) {
    auto ri = sig.find(rel);
    if (!ri) throw Error(Errc::UnknownRelation, "unknown relation '" + rel + "'");
    const int arity = sig.relations()[*ri].arity;
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != arity)
        throw Error(Errc::ArityError, "relation '" + rel + "' has arity " + std::to_string(arity) +
                                          " but a tuple has " + std::to_string(t.size()) + " entries");
      std::vector<int> ids;
      for (const auto& name : t) {
        auto e = s.element(name);
        if (!e) throw Error(Errc::UnknownElement, "undeclared element '" + name + "'");
        ids.push_back(*e);
      }
      s.set(*ri, ids);
    }
  }
  return s;
}

dsl::StructureDoc FiniteStructure::to_doc() const {
  dsl::StructureDoc doc;
  doc.universe = names_;
  for (std::size_t r = 0; r < sig_.size(); ++r) {
    auto& set = doc.relations[sig_.relations()[r].name];
    for (const auto& t : tuples(r)) {
      std::vector<std::string> named;
      for (int e : t) named.push_back(name(e));
      set.insert(std::move(named));
    }
  }
  return doc;
}

std::optional<int> FiniteStructure::element(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::size_t FiniteStructure::tuple_index(std::span<const int> tuple) const {
  std::size_t idx = 0;
  for (int e : tuple) idx = idx * names_.size() + static_cast<std::size_t>(e);
  return idx;
}

bool FiniteStructure::holds(std::size_t rel, std::span<const int> tuple) const {
  return tables_[rel].test(tuple_index(tuple));
}

void FiniteStructure::set(std::size_t rel, std::span<const int> tuple, bool value) {
  tables_[rel].set(tuple_index(tuple), value);
}

std::vector<int> decode_tuple(std::size_t index, int arity, std::size_t n) {
  std::vector<int> t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(index % n);
    index /= n;
  }
  return t;
}

std::vector<std::vector<int>> FiniteStructure::tuples(std::size_t rel) const {
  std::vector<std::vector<int>> out;
  for (auto i : tables_[rel].ones())
    out.push_back(decode_tuple(i, sig_.relations()[rel].arity, names_.size()));
  return out;
}

FiniteStructure FiniteStructure::induced(std::span<const int> elements) const {
  std::vector<std::string> names;
  for (int e : elements) names.push_back(name(e));
  FiniteStructure out(sig_, std::move(names));
  for (std::size_t r = 0; r < sig_.size(); ++r) {
    const int arity = sig_.relations()[r].arity;
    const std::size_t m = elements.size();
    for (std::size_t i = 0; i < out.tables_[r].size(); ++i) {
      auto local = decode_tuple(i, arity, m);
      std::vector<int> global;
      for (int e : local) global.push_back(elements[static_cast<std::size_t>(e)]);
      if (holds(r, global)) out.tables_[r].set(i);
    }
  }
  return out;
}

FiniteStructure FiniteStructure::permuted(std::span<const int> perm) const {
  std::vector<std::string> names(names_.size());
  for (std::size_t e = 0; e < names_.size(); ++e) names[static_cast<std::size_t>(perm[e])] = names_[e];
  FiniteStructure out(sig_, std::move(names));
  for (std::size_t r = 0; r < sig_.size(); ++r)
    for (const auto& t : tuples(r)) {
      std::vector<int> image;
      for (int e : t) image.push_back(perm[static_cast<std::size_t>(e)]);
      out.set(r, image);
    }
  return out;
}

bool FiniteStructure::contains_induced(const FiniteStructure& sub) const {
  if (!(sub.signature() == sig_)) return false;
  std::vector<int> ids;
  for (const auto& n : sub.names()) {
    auto e = element(n);
    if (!e) return false;
    ids.push_back(*e);
  }
  return induced(ids) == sub;
}

std::string element_name(std::size_t i) {
  static const std::string letters = "abcdefghijklmnopqrstuvw";
  if (i < letters.size()) return std::string(1, letters[i]);
  return "e" + std::to_string(i);
}

}  // namespace ktypes::semantics
