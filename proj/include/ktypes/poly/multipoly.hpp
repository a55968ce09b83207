#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktypes/poly/unipoly.hpp"

namespace ktypes::poly {

inline constexpr int kMaxVars = 4;
inline constexpr int kMaxGeneratorDegree = 6;
inline constexpr const char* kVarNames[kMaxVars] = {"x", "y", "z", "w"};

/// Exponent vector over x, y, z, w.
struct Monomial {
  std::array<int, kMaxVars> e{};

  int degree() const;
  bool divides(const Monomial& m) const;
  /// Bit i set iff variable i occurs.
  unsigned support() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order with x > y > z > w: higher total
/// degree first; on ties, the monomial with the smaller exponent in the
/// last variable where they differ is larger.
struct Grevlex {
  bool operator()(const Monomial& a, const Monomial& b) const;  // a < b
};

/// Sparse multivariate polynomial; no zero coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, Grevlex>;

  MultiPoly() = default;
  static MultiPoly constant(Rational c);
  static MultiPoly variable(int i);
  static MultiPoly term(Monomial m, Rational c);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  /// Largest monomial in grevlex order; requires a nonzero polynomial.
  const Monomial& lead_monomial() const;
  const Rational& lead_coeff() const;
  int degree() const;
  /// Bit i set iff variable i occurs.
  unsigned variables() const;
  MultiPoly monic() const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in decreasing grevlex order, e.g. "3/2*x^2*y - 1".
  std::string to_string() const;

  /// The polynomial in variable `var` alone; throws InvalidArgument if
  /// another variable occurs.
  UniPoly to_univariate(int var) const;
  static MultiPoly from_univariate(const UniPoly& p, int var);

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Remainder of f on division by `basis` (full reduction).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

/// The reduced Gröbner basis of the ideal generated by `gens` under
/// grevlex: monic, sorted by decreasing leading monomial, unique for the
/// ideal. The zero ideal has the empty basis. Throws CapExceeded for more
/// than four variables, a generator of degree above 6, or a basis growing
/// beyond `max_basis` elements.
std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, std::size_t max_basis = 256);

/// S-polynomial of f and g.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<MultiPoly> gens);

  const std::vector<MultiPoly>& generators() const { return gens_; }
  /// Computed on first use.
  const std::vector<MultiPoly>& basis() const;
  bool is_proper() const;
  unsigned variables() const;

 private:
  std::vector<MultiPoly> gens_;
  mutable std::optional<std::vector<MultiPoly>> basis_;
};

bool ideal_member(const MultiPoly& f, const Ideal& i);

/// Largest size of a variable subset S of the first `nvars` variables such
/// that no leading monomial of the reduced basis uses only variables of S.
/// Throws ImproperIdeal when 1 ∈ I and InvalidArgument when a generator
/// uses a variable outside the first nvars.
int ideal_dim(const Ideal& i, int nvars);

}  // namespace ktypes::poly
