#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ktypes/dsl/parser.hpp"
#include "ktypes/error.hpp"
#include "ktypes/fixtures.hpp"

namespace ktypes::cli {

void Table::print(std::ostream& os) const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_suffix(std::string s, std::string_view suffix) {
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
    s.resize(s.size() - suffix.size());
  return s;
}

}  // namespace

dsl::TheorySpec load_theory(const std::string& arg) {
  if (auto text = read_file(arg)) return dsl::parse_theory(*text);
  if (auto text = fixtures::theory_text(strip_suffix(arg, ".thy"))) return dsl::parse_theory(*text);
  throw Error(Errc::InvalidArgument, "no theory file or bundled theory named '" + arg + "' (bundled: " +
                                         join(fixtures::theory_names(), ", ") + ")");
}

semantics::FiniteStructure load_structure(const std::string& arg, const logic::Signature& sig) {
  if (auto text = read_file(arg)) return dsl::parse_structure(*text, sig);
  if (auto text = fixtures::structure_text(strip_suffix(arg, ".str"))) return dsl::parse_structure(*text, sig);
  throw Error(Errc::InvalidArgument, "no structure file or bundled structure named '" + arg + "' (bundled: " +
                                         join(fixtures::structure_names(), ", ") + ")");
}

semantics::ContextOptions context_options() {
  semantics::ContextOptions opts;
  if (const char* env = std::getenv("KTYPES_MAX_ELEMENTS"); env != nullptr && *env != '\0') {
    const std::string_view v(env);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || ptr != v.data() + v.size() || n == 0)
      throw Error(Errc::InvalidArgument, "KTYPES_MAX_ELEMENTS must be a positive integer, got '" +
                                             std::string(v) + "'");
    opts.max_elements = n;
  }
  return opts;
}

Json structure_json(const semantics::FiniteStructure& s) {
  const dsl::StructureDoc doc = s.to_doc();
  Json j;
  j["universe"] = doc.universe;
  j["relations"] = Json::object();
  for (const auto& [rel, tuples] : doc.relations) {
    Json arr = Json::array();
    for (const auto& t : tuples) arr.push_back(t);
    j["relations"][rel] = arr;
  }
  return j;
}

std::string structure_inline(const semantics::FiniteStructure& s) {
  std::vector<std::string> facts;
  const auto& rels = s.signature().relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (const auto& t : s.tuples(r)) {
      std::vector<std::string> names;
      for (int e : t) names.push_back(s.name(e));
      facts.push_back(rels[r].name + "(" + join(names, ",") + ")");
    }
  }
  std::string out = "{" + join(s.names(), ", ");
  if (!facts.empty()) out += "; " + join(facts, ", ");
  return out + "}";
}

Json context_json(const semantics::Context& ctx) {
  Json j;
  j["theory"] = ctx.theory().name;
  j["params"] = structure_json(ctx.params());
  j["vars"] = ctx.vars();
  j["var_names"] = ctx.var_names();
  return j;
}

std::string context_line(const semantics::Context& ctx) {
  return "context: " + ctx.theory().name + " over " + structure_inline(ctx.params()) + ", " +
         std::to_string(ctx.vars()) + (ctx.vars() == 1 ? " variable (" : " variables (") +
         join(ctx.var_names(), ", ") + "), " + std::to_string(ctx.size()) + " diagrams";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == sep) flush();
    else cur += c;
  }
  flush();
  return out;
}

std::vector<int> variable_indices(const semantics::Context& ctx, const std::string& list) {
  std::vector<int> out;
  for (const auto& name : split_list(list, ',')) {
    const auto& names = ctx.var_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw Error(Errc::InvalidArgument, "unknown variable '" + name + "' (variables: " + join(names, ", ") + ")");
    const int i = static_cast<int>(it - names.begin());
    if (std::find(out.begin(), out.end(), i) != out.end())
      throw Error(Errc::InvalidArgument, "variable '" + name + "' listed twice");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

}  // namespace ktypes::cli
