#include "ktypes/dsl/render.hpp"

#include <json.hpp>

namespace ktypes::dsl {

using logic::Formula;

std::vector<std::string> default_var_names(int vars) {
  if (vars == 1) return {"x"};
  std::vector<std::string> out;
  for (int i = 0; i < vars; ++i) out.push_back("z" + std::to_string(i + 1));
  return out;
}

std::string render_slot(const logic::Slot& s, std::span<const std::string> vars) {
  if (s.is_param()) return s.param_name();
  const auto i = static_cast<std::size_t>(s.var_index());
  if (i < vars.size()) return vars[i];
  return "z" + std::to_string(i + 1);
}

std::string render_atom(const logic::Atom& a, std::span<const std::string> vars) {
  if (a.is_equality())
    return render_slot(a.args()[0], vars) + " = " + render_slot(a.args()[1], vars);
  std::string out = a.relation_name() + "(";
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (i > 0) out += ",";
    out += render_slot(a.args()[i], vars);
  }
  return out + ")";
}

namespace {

std::string render_in(const Formula& f, std::span<const std::string> vars, Formula::Kind parent) {
  switch (f.kind()) {
    case Formula::Kind::Top: return "true";
    case Formula::Kind::Bot: return "false";
    case Formula::Kind::Atom: return render_atom(f.atom(), vars);
    case Formula::Kind::Not: {
      const Formula& k = f.children().front();
      if (k.kind() == Formula::Kind::Atom && k.atom().is_equality())
        return render_slot(k.atom().args()[0], vars) + " != " + render_slot(k.atom().args()[1], vars);
      if (k.kind() == Formula::Kind::Atom) return "!" + render_atom(k.atom(), vars);
      return "!(" + render_in(k, vars, Formula::Kind::Not) + ")";
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const bool is_and = f.kind() == Formula::Kind::And;
      std::string out;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += is_and ? " & " : " | ";
        out += render_in(f.children()[i], vars, f.kind());
      }
      // Conjunctions inside disjunctions are parenthesized for readability.
      const bool wrap = parent == Formula::Kind::Not || (parent == Formula::Kind::And && !is_and) ||
                        (parent == Formula::Kind::Or && is_and);
      return wrap ? "(" + out + ")" : out;
    }
  }
  return "?";
}

}  // namespace

std::string render(const Formula& f, std::span<const std::string> vars) {
  return render_in(f, vars, Formula::Kind::Top);
}

std::string render_theory(const TheorySpec& t) {
  std::string out = "theory " + t.name + "\n";
  if (t.signature.size() > 0) {
    out += "relations: ";
    for (std::size_t i = 0; i < t.signature.size(); ++i) {
      if (i > 0) out += ", ";
      const auto& r = t.signature.relations()[i];
      out += r.name + "/" + std::to_string(r.arity);
    }
    out += "\n";
  }
  for (const auto& ax : t.axioms) {
    out += "axiom: ";
    if (!ax.bound.empty()) {
      out += "all ";
      for (std::size_t i = 0; i < ax.bound.size(); ++i) {
        if (i > 0) out += ",";
        out += ax.bound[i];
      }
      out += ". ";
    }
    out += render(ax.matrix, ax.bound) + "\n";
  }
  return out;
}

std::string render_structure_text(const StructureDoc& doc) {
  std::string out = "universe:";
  for (std::size_t i = 0; i < doc.universe.size(); ++i) out += (i == 0 ? " " : ", ") + doc.universe[i];
  out += "\n";
  for (const auto& [rel, tuples] : doc.relations) {
    out += rel + ":";
    bool first = true;
    for (const auto& t : tuples) {
      out += first ? " (" : ", (";
      first = false;
      for (std::size_t i = 0; i < t.size(); ++i) out += (i > 0 ? "," : "") + t[i];
      out += ")";
    }
    out += "\n";
  }
  return out;
}

std::string render_structure_json(const StructureDoc& doc) {
  nlohmann::ordered_json j;
  j["universe"] = doc.universe;
  j["relations"] = nlohmann::ordered_json::object();
  for (const auto& [rel, tuples] : doc.relations) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : tuples) arr.push_back(t);
    j["relations"][rel] = arr;
  }
  return j.dump();
}

}  // namespace ktypes::dsl
