#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ktypes::poly {

/// Exact rationals: GMP keeps the denominator positive and the fraction
/// reduced.
using Rational = mpq_class;

/// Univariate polynomial over the rationals, dense, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);
  /// x^k
  static UniPoly monomial(int k, Rational c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational lead() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& k, const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder; throws ZeroPolynomial for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  /// "3/2*x^2 - x + 1" in variable `var`.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd. Throws BothZero when both inputs are zero.
UniPoly gcd(const UniPoly& f, const UniPoly& g);

struct ExtGcd {
  UniPoly d, u, v;
};

/// d = gcd(f, g) monic and u*f + v*g = d. Throws BothZero.
ExtGcd ext_gcd(const UniPoly& f, const UniPoly& g);

/// Yun's algorithm: pairs (a_i, i) with f = lead * Π a_i^i, each a_i monic,
/// squarefree, pairwise coprime and non-constant. Throws ZeroPolynomial.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

/// Rational roots of f, ascending, without multiplicity. Throws
/// ZeroPolynomial.
std::vector<Rational> rational_roots(const UniPoly& f);

/// Monic irreducible factors over the rationals with multiplicities, sorted
/// by degree and then by coefficients (constant term first). Rational roots
/// are split off first; remaining factors are found by Kronecker's method.
/// Throws ZeroPolynomial and DegreeCapExceeded (degree > cap).
std::vector<std::pair<UniPoly, int>> factor_q(const UniPoly& f, int degree_cap = 8);

/// A system of equations p_i(x) = 0 is consistent over the rationals, in the
/// sense of having a root in some integral domain of characteristic 0
/// extending them, iff the gcd of the p_i is zero or non-constant.
bool poly_consistency(const std::vector<UniPoly>& system);

struct PolyPrimeType {
  enum class Kind { Trivial, Maximal, NonPrime };
  Kind kind = Kind::Trivial;
  /// The gcd of the system (zero for the trivial type).
  UniPoly gcd;
  /// Maximal: the irreducible polynomial isolating the type.
  UniPoly minpoly;
  /// NonPrime: the distinct irreducible factors of the gcd.
  std::vector<UniPoly> factors;
};

/// Trivial when the gcd is zero, maximal when the gcd is a power of one
/// irreducible polynomial, non-prime otherwise. Throws InconsistentSystem.
PolyPrimeType poly_prime_type(const std::vector<UniPoly>& system, int degree_cap = 8);

}  // namespace ktypes::poly
