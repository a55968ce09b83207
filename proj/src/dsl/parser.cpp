#include "ktypes/dsl/parser.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include <json.hpp>

#include "lexer.hpp"

namespace ktypes::dsl {

using detail::Tok;
using detail::Token;
using logic::Atom;
using logic::Formula;
using logic::Slot;

namespace {

const std::set<std::string, std::less<>> kKeywords = {"theory", "relations", "axiom", "all",
                                                       "exists", "true", "false"};

bool is_keyword(std::string_view s) { return kKeywords.count(s) > 0; }

// Maps an identifier to a slot, or returns nullopt when it is unknown.
using Resolver = std::function<std::optional<Slot>(const std::string&)>;

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(detail::tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  Token take() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(Errc::SyntaxError, t.pos, "unexpected " + got, expected);
  }

  Token expect(Tok t) {
    if (!at(t)) fail({detail::describe(t)});
    return take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail({"'" + std::string(w) + "'"});
    take();
  }

  Token expect_name() {
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail({"identifier"});
    return take();
  }

  // ---- formulas ----------------------------------------------------------

  Formula formula(const logic::Signature& sig, const Resolver& resolve, Errc unknown,
                  bool equational) {
    sig_ = &sig;
    resolve_ = &resolve;
    unknown_ = unknown;
    equational_ = equational;
    return implication();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at(Tok::Arrow)) {
      reject_negation("implication");
      take();
      Formula rhs = implication();
      return Formula::disj(Formula::negate(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (at(Tok::Bar)) {
      take();
      parts.push_back(conjunction());
    }
    return Formula::disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (at(Tok::Amp)) {
      take();
      parts.push_back(unary());
    }
    return Formula::conj(std::move(parts));
  }

  Formula unary() {
    if (at(Tok::Bang)) {
      reject_negation("negation");
      take();
      return Formula::negate(unary());
    }
    return primary();
  }

  Formula primary() {
    if (at(Tok::LParen)) {
      take();
      Formula f = implication();
      expect(Tok::RParen);
      return f;
    }
    if (!at(Tok::Ident)) fail({"'('", "'true'", "'false'", "atom"});
    if (at_word("true")) {
      take();
      return Formula::top();
    }
    if (at_word("false")) {
      take();
      return Formula::bot();
    }
    if (at_word("all") || at_word("exists"))
      throw ParseError(Errc::SyntaxError, peek().pos,
                       "quantifiers are not allowed inside formulas");
    if (peek(1).kind == Tok::LParen) return relation_atom();
    Slot lhs = term();
    if (at(Tok::Eq)) {
      take();
      return Formula::equals(lhs, term());
    }
    if (at(Tok::Neq)) {
      reject_negation("'!='");
      take();
      return Formula::negate(Formula::equals(lhs, term()));
    }
    fail({"'('", "'='", "'!='"});
  }

  Formula relation_atom() {
    Token name = take();
    auto ri = sig_->find(name.text);
    if (!ri) throw ParseError(Errc::UnknownRelation, name.pos, "unknown relation '" + name.text + "'");
    expect(Tok::LParen);
    std::vector<Slot> args{term()};
    while (at(Tok::Comma)) {
      take();
      args.push_back(term());
    }
    expect(Tok::RParen);
    const int arity = sig_->relations()[*ri].arity;
    if (static_cast<int>(args.size()) != arity)
      throw ParseError(Errc::ArityError, name.pos,
                       "relation '" + name.text + "' has arity " + std::to_string(arity) +
                           " but is applied to " + std::to_string(args.size()) + " argument(s)");
    return Formula::atom(Atom::relation(name.text, std::move(args)));
  }

  Slot term() {
    Token t = expect_name();
    auto s = (*resolve_)(t.text);
    if (!s) {
      const char* what = unknown_ == Errc::UnboundVariable ? "unbound variable '" : "unknown variable or parameter '";
      throw ParseError(unknown_, t.pos, what + t.text + "'");
    }
    return *s;
  }

  void reject_negation(const char* what) const {
    if (equational_)
      throw ParseError(Errc::NegationNotAllowed, peek().pos,
                       std::string(what) + " is not allowed in an equational formula");
  }

  // ---- theory files ------------------------------------------------------

  TheorySpec theory() {
    TheorySpec t;
    expect_word("theory");
    t.name = expect_name().text;
    std::vector<logic::Relation> rels;
    if (at_word("relations")) {
      take();
      expect(Tok::Colon);
      if (at(Tok::Ident) && !is_keyword(peek().text)) {
        rels.push_back(relation_decl());
        while (at(Tok::Comma)) {
          take();
          rels.push_back(relation_decl());
        }
      }
    }
    try {
      t.signature = logic::Signature(rels);
    } catch (const Error& e) {
      throw ParseError(e.code(), peek().pos, e.what());
    }
    while (at_word("axiom")) t.axioms.push_back(axiom(t.signature));
    if (!at(Tok::End)) fail({"'axiom'", "end of input"});
    return t;
  }

  logic::Relation relation_decl() {
    Token name = expect_name();
    expect(Tok::Slash);
    Token ar = expect(Tok::Number);
    int arity = 0;
    try {
      arity = std::stoi(ar.text);
    } catch (...) {
      arity = 0;
    }
    if (arity < 1) throw ParseError(Errc::ArityError, ar.pos, "arity must be a positive integer");
    return {name.text, arity};
  }

  Axiom axiom(const logic::Signature& sig) {
    take();  // 'axiom'
    expect(Tok::Colon);
    Axiom ax;
    if (at_word("exists"))
      throw ParseError(Errc::SyntaxError, peek().pos,
                       "existential axioms are not supported; axioms must be universal");
    if (at_word("all")) {
      take();
      ax.bound.push_back(expect_name().text);
      while (at(Tok::Comma)) {
        take();
        Token v = expect_name();
        if (std::find(ax.bound.begin(), ax.bound.end(), v.text) != ax.bound.end())
          throw ParseError(Errc::DuplicateName, v.pos, "variable '" + v.text + "' bound twice");
        ax.bound.push_back(v.text);
      }
      expect(Tok::Dot);
    }
    Resolver resolve = [&](const std::string& name) -> std::optional<Slot> {
      auto it = std::find(ax.bound.begin(), ax.bound.end(), name);
      if (it == ax.bound.end()) return std::nullopt;
      return Slot::var(static_cast<int>(it - ax.bound.begin()));
    };
    ax.matrix = formula(sig, resolve, Errc::UnboundVariable, false);
    return ax;
  }

  // ---- line-oriented structures -------------------------------------------

  StructureDoc structure() {
    StructureDoc doc;
    expect_word("universe");
    expect(Tok::Colon);
    std::set<std::string> declared;
    auto element = [&]() {
      Token e = expect_name();
      if (!declared.insert(e.text).second)
        throw ParseError(Errc::DuplicateName, e.pos, "element '" + e.text + "' declared twice");
      doc.universe.push_back(e.text);
    };
    if (at(Tok::Ident) && peek(1).kind != Tok::Colon) {
      element();
      while (at(Tok::Comma)) {
        take();
        element();
      }
    }
    while (at(Tok::Ident)) {
      Token rel = expect_name();
      expect(Tok::Colon);
      auto& tuples = doc.relations[rel.text];
      if (at(Tok::LParen)) {
        tuples.insert(tuple(declared));
        while (at(Tok::Comma)) {
          take();
          tuples.insert(tuple(declared));
        }
      }
    }
    if (!at(Tok::End)) fail({"relation name", "end of input"});
    return doc;
  }

  std::vector<std::string> tuple(const std::set<std::string>& declared) {
    expect(Tok::LParen);
    std::vector<std::string> t;
    auto entry = [&] {
      Token e = expect_name();
      if (!declared.count(e.text))
        throw ParseError(Errc::UnknownElement, e.pos, "undeclared element '" + e.text + "'");
      t.push_back(e.text);
    };
    entry();
    while (at(Tok::Comma)) {
      take();
      entry();
    }
    expect(Tok::RParen);
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const logic::Signature* sig_ = nullptr;
  const Resolver* resolve_ = nullptr;
  Errc unknown_ = Errc::UnknownElement;
  bool equational_ = false;
};

SourcePos offset_to_pos(std::string_view text, std::size_t offset) {
  SourcePos p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Best-effort location of a JSON string literal for semantic diagnostics.
SourcePos locate(std::string_view text, const std::string& literal) {
  auto at = text.find("\"" + literal + "\"");
  return offset_to_pos(text, at == std::string_view::npos ? 0 : at);
}

StructureDoc structure_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(Errc::SyntaxError, offset_to_pos(text, e.byte > 0 ? e.byte - 1 : 0),
                     "malformed JSON structure");
  }
  auto bad = [&](const std::string& what) {
    throw ParseError(Errc::SyntaxError, SourcePos{}, "structure document: " + what);
  };
  if (!j.is_object() || !j.contains("universe") || !j["universe"].is_array())
    bad("expected an object with a \"universe\" array");
  StructureDoc doc;
  std::set<std::string> declared;
  for (const auto& e : j["universe"]) {
    if (!e.is_string()) bad("universe entries must be strings");
    auto name = e.get<std::string>();
    if (!declared.insert(name).second)
      throw ParseError(Errc::DuplicateName, locate(text, name), "element '" + name + "' declared twice");
    doc.universe.push_back(name);
  }
  if (j.contains("relations")) {
    if (!j["relations"].is_object()) bad("\"relations\" must be an object");
    for (const auto& [rel, tuples] : j["relations"].items()) {
      if (!tuples.is_array()) bad("relation \"" + rel + "\" must map to an array of tuples");
      auto& set = doc.relations[rel];
      for (const auto& t : tuples) {
        if (!t.is_array()) bad("tuples must be arrays of element names");
        std::vector<std::string> names;
        for (const auto& e : t) {
          if (!e.is_string()) bad("tuple entries must be strings");
          auto name = e.get<std::string>();
          if (!declared.count(name))
            throw ParseError(Errc::UnknownElement, locate(text, name), "undeclared element '" + name + "'");
          names.push_back(name);
        }
        set.insert(std::move(names));
      }
    }
  }
  return doc;
}

bool looks_like_json(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

Resolver context_resolver(std::span<const std::string> vars, std::span<const std::string> params) {
  return [vars, params](const std::string& name) -> std::optional<Slot> {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return Slot::var(static_cast<int>(i));
    for (const auto& p : params)
      if (p == name) return Slot::param(p);
    return std::nullopt;
  };
}

}  // namespace

TheorySpec parse_theory(std::string_view text) {
  Parser p(text);
  return p.theory();
}

StructureDoc parse_structure_doc(std::string_view text) {
  if (looks_like_json(text)) return structure_from_json(text);
  Parser p(text);
  return p.structure();
}

semantics::FiniteStructure parse_structure(std::string_view text, const logic::Signature& sig) {
  StructureDoc doc = parse_structure_doc(text);
  try {
    return semantics::FiniteStructure::from_doc(doc, sig);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Point at the offending relation name where it can be found.
    SourcePos pos;
    for (const auto& [rel, tuples] : doc.relations) {
      auto ri = sig.find(rel);
      bool culprit = !ri;
      if (ri)
        for (const auto& t : tuples)
          culprit = culprit || static_cast<int>(t.size()) != sig.relations()[*ri].arity;
      if (culprit) {
        auto at = text.find(rel);
        pos = offset_to_pos(text, at == std::string_view::npos ? 0 : at);
        break;
      }
    }
    throw ParseError(e.code(), pos, e.what());
  }
}

logic::Formula parse_formula(std::string_view text, const logic::Signature& sig,
                             std::span<const std::string> vars,
                             std::span<const std::string> params, FormulaMode mode) {
  Parser p(text);
  Resolver r = context_resolver(vars, params);
  Formula f = p.formula(sig, r, Errc::UnknownElement, mode == FormulaMode::Equational);
  if (!p.at(Tok::End)) p.fail({"'&'", "'|'", "'->'", "end of input"});
  return f;
}

logic::EqFormula parse_eq_formula(std::string_view text, const logic::Signature& sig,
                                  std::span<const std::string> vars,
                                  std::span<const std::string> params) {
  return logic::EqFormula(parse_formula(text, sig, vars, params, FormulaMode::Equational));
}

std::vector<logic::EqFormula> parse_eq_type(std::string_view text, const logic::Signature& sig,
                                            std::span<const std::string> vars,
                                            std::span<const std::string> params) {
  Parser p(text);
  Resolver r = context_resolver(vars, params);
  std::vector<logic::EqFormula> out;
  out.emplace_back(p.formula(sig, r, Errc::UnknownElement, true));
  while (p.at(Tok::Semicolon)) {
    p.take();
    out.emplace_back(p.formula(sig, r, Errc::UnknownElement, true));
  }
  if (!p.at(Tok::End)) p.fail({"'&'", "'|'", "';'", "end of input"});
  return out;
}

}  // namespace ktypes::dsl
