#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "ktypes/dsl/theory.hpp"
#include "ktypes/semantics/context.hpp"
#include "ktypes/semantics/structure.hpp"

namespace ktypes::cli {

using Json = nlohmann::ordered_json;

// Left-aligned columns separated by two spaces, trailing blanks trimmed.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Input resolution: an existing file path, else a bundled fixture name with
// or without its extension. Throws InvalidArgument when neither matches.
dsl::TheorySpec load_theory(const std::string& arg);
semantics::FiniteStructure load_structure(const std::string& arg, const logic::Signature& sig);

// KTYPES_MAX_ELEMENTS, default 6. Throws InvalidArgument on a malformed value.
semantics::ContextOptions context_options();

Json structure_json(const semantics::FiniteStructure& s);
// "{a, b; r(a,b), r(b,a)}"
std::string structure_inline(const semantics::FiniteStructure& s);
Json context_json(const semantics::Context& ctx);
std::string context_line(const semantics::Context& ctx);
std::string yes_no(bool b);
std::string pass_fail(bool b);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::vector<std::string> split_list(const std::string& text, char sep);
// Variable names to indices in the context; throws InvalidArgument.
std::vector<int> variable_indices(const semantics::Context& ctx, const std::string& list);

void emit(std::ostream& os, const Json& j);

}  // namespace ktypes::cli
