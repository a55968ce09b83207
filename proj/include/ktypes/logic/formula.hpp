#pragma once

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ktypes::logic {

/// An argument position of an atom: either a variable (by index into the
/// query's variable tuple) or a named parameter. The total slot order puts
/// variables before parameters, variables by index, parameters by name.
class Slot {
 public:
  static Slot var(int index) { return Slot(Kind::Var, index, {}); }
  static Slot param(std::string name) { return Slot(Kind::Param, -1, std::move(name)); }

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_param() const { return kind_ == Kind::Param; }
  int var_index() const { return index_; }
  const std::string& param_name() const { return name_; }

  friend auto operator<=>(const Slot&, const Slot&) = default;
  friend bool operator==(const Slot&, const Slot&) = default;

 private:
  enum class Kind { Var = 0, Param = 1 };
  Slot(Kind k, int i, std::string n) : kind_(k), index_(i), name_(std::move(n)) {}

  Kind kind_;
  int index_;
  std::string name_;
};

/// A relation atom r(s1,...,sk) or an equality s1 = s2. Equality atoms keep
/// their two slots sorted (canonical orientation); the trivially true s = s
/// is never represented as an Atom (see Formula::atom).
class Atom {
 public:
  static Atom relation(std::string name, std::vector<Slot> args);
  /// Requires lhs != rhs.
  static Atom equality(Slot lhs, Slot rhs);

  bool is_equality() const { return equality_; }
  const std::string& relation_name() const { return relation_; }
  const std::vector<Slot>& args() const { return args_; }

  bool mentions_var() const;
  bool is_ground() const { return !mentions_var(); }
  /// Bit i set iff variable i occurs.
  unsigned long long var_mask() const;

  /// Relation atoms before equalities, then by name, then slot-wise.
  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  Atom(bool eq, std::string rel, std::vector<Slot> args)
      : equality_(eq), relation_(std::move(rel)), args_(std::move(args)) {}

  bool equality_;
  std::string relation_;
  std::vector<Slot> args_;
};

/// Immutable quantifier-free formula over {Top, Bot, Atom, Not, And, Or}.
///
/// Construction goes through the smart constructors, which keep every value
/// in a simplified shape: nested And/Or are flattened, Top/Bot constants are
/// absorbed, one-child connectives are unwrapped, double negation cancels,
/// and s = s becomes Top. Two formulas compare equal iff their trees do.
class Formula {
 public:
  enum class Kind { Top, Bot, Atom, Not, And, Or };

  Formula();  // Top

  static Formula top();
  static Formula bot();
  static Formula atom(Atom a);
  /// Equality s = t, or Top when s == t.
  static Formula equals(Slot s, Slot t);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula conj(Formula a, Formula b) { return conj(std::vector<Formula>{std::move(a), std::move(b)}); }
  static Formula disj(Formula a, Formula b) { return disj(std::vector<Formula>{std::move(a), std::move(b)}); }

  Kind kind() const;
  /// Only valid for Kind::Atom.
  const Atom& atom() const;
  /// Children of Not (one), And and Or (at least two).
  const std::vector<Formula>& children() const;

  /// True iff no Not node is reachable.
  bool is_positive() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A Formula with no negation: an equational formula.
class EqFormula {
 public:
  EqFormula() = default;  // Top
  /// Throws NegationNotAllowed if f contains a negation.
  explicit EqFormula(Formula f);

  const Formula& formula() const { return f_; }
  operator const Formula&() const { return f_; }

  friend bool operator==(const EqFormula&, const EqFormula&) = default;

 private:
  Formula f_;
};

std::set<Atom> atoms_of(const Formula& f);
/// Largest variable index occurring in f, or -1.
int max_var(const Formula& f);

/// Replaces variable i by map[i]; shapes and equality orientation are
/// re-normalized. Throws InvalidArgument if f mentions a variable >= map.size().
Formula substitute(const Formula& f, std::span<const Slot> map);
EqFormula substitute(const EqFormula& f, std::span<const Slot> map);

}  // namespace ktypes::logic
