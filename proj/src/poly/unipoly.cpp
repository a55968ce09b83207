#include "ktypes/poly/unipoly.hpp"

#include <algorithm>
#include <optional>

#include "ktypes/error.hpp"

namespace ktypes::poly {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

UniPoly UniPoly::constant(Rational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::monomial(int k, Rational c) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::lead() const { return is_zero() ? Rational(0) : c_.back(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rational l = lead();
  std::vector<Rational> v = c_;
  for (auto& q : v) q /= l;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * static_cast<long>(k));
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& q : v) q = -q;
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& k, const UniPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& q : v) q *= k;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> r = c_;
  std::vector<Rational> q(std::max(0, degree() - d.degree() + 1), 0);
  const Rational l = d.lead();
  for (int k = degree(); k >= d.degree(); --k) {
    const Rational t = r[static_cast<std::size_t>(k)] / l;
    if (t == 0) continue;
    q[static_cast<std::size_t>(k - d.degree())] = t;
    for (int j = 0; j <= d.degree(); ++j)
      r[static_cast<std::size_t>(k - d.degree() + j)] -= t * d.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  // Invariants: r0 = s0*f + t0*g, r1 = s1*f + t1*g.
  UniPoly r0 = f, r1 = g, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UniPoly s = s0 - q * s1, t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  const Rational l = r0.lead();
  const Rational inv = Rational(1) / l;
  return {inv * r0, inv * s0, inv * t0};
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() == 0) return out;
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = f.divmod(a0).first;
  UniPoly c = fp.divmod(a0).first;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

// Integer polynomial with content 1 and positive leading coefficient,
// proportional to f.
std::vector<mpz_class> primitive(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& q : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> v;
  mpz_class content = 0;
  for (const auto& q : f.coeffs()) {
    mpz_class z = q.get_num() * (den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    v.push_back(z);
  }
  if (v.back() < 0) content = -content;
  for (auto& z : v) z /= content;
  return v;
}

UniPoly from_integers(const std::vector<mpz_class>& v) {
  std::vector<Rational> q;
  for (const auto& z : v) q.emplace_back(z);
  return UniPoly(std::move(q));
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool integral(const UniPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& q) { return q.get_den() == 1; });
}

// Newton interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly p = UniPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * UniPoly({-xs[i], 1}) + UniPoly::constant(dd[i]);
  return p;
}

// A factor of degree exactly d of the primitive squarefree f, if any.
std::optional<UniPoly> kronecker_factor(const UniPoly& f, int d) {
  struct Point {
    Rational x;
    std::vector<mpz_class> divisors;
  };
  std::vector<Point> candidates;
  for (long k = 0; candidates.size() < static_cast<std::size_t>(3 * (d + 1)) && k < 64; ++k) {
    for (long x : {k, -k}) {
      if (k == 0 && !candidates.empty()) break;
      const Rational v = f.eval(x);
      if (v == 0) return UniPoly({-Rational(x), 1});
      candidates.push_back({x, positive_divisors(v.get_num())});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
  candidates.resize(static_cast<std::size_t>(d + 1));

  std::vector<Rational> xs, ys(static_cast<std::size_t>(d + 1));
  for (const auto& c : candidates) xs.push_back(c.x);
  std::optional<UniPoly> found;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == xs.size()) {
      UniPoly g = interpolate(xs, ys);
      if (g.degree() != d || !integral(g)) return;
      if (f.divmod(g).second.is_zero()) found = g;
      return;
    }
    for (const auto& div : candidates[i].divisors)
      for (int sign : {1, -1}) {
        if (i == 0 && sign < 0) continue;  // g and -g are the same factor
        ys[i] = Rational(div * sign);
        self(self, i + 1);
        if (found) return;
      }
  };
  rec(rec, 0);
  return found;
}

void split_irreducible(const UniPoly& f, int from_degree, std::vector<UniPoly>& out) {
  for (int d = from_degree; 2 * d <= f.degree(); ++d) {
    if (auto g = kronecker_factor(f, d)) {
      out.push_back(g->monic());
      split_irreducible(from_integers(primitive(f.divmod(*g).first)), d, out);
      return;
    }
  }
  out.push_back(f.monic());
}

bool factor_less(const std::pair<UniPoly, int>& a, const std::pair<UniPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  return std::lexicographical_compare(a.first.coeffs().begin(), a.first.coeffs().end(), b.first.coeffs().begin(),
                                      b.first.coeffs().end());
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Rational> roots;
  std::vector<mpz_class> v = primitive(f);
  std::size_t low = 0;
  while (low < v.size() && v[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (v.size() - low > 1) {
    const UniPoly g = from_integers(std::vector<mpz_class>(v.begin() + static_cast<std::ptrdiff_t>(low), v.end()));
    for (const auto& p : positive_divisors(v[low]))
      for (const auto& q : positive_divisors(v.back()))
        for (int sign : {1, -1}) {
          Rational r(p * sign, q);
          r.canonicalize();
          if (g.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::pair<UniPoly, int>> factor_q(const UniPoly& f, int degree_cap) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factorization of the zero polynomial");
  if (f.degree() > degree_cap)
    throw Error(Errc::DegreeCapExceeded, "degree " + std::to_string(f.degree()) + " exceeds the cap " +
                                             std::to_string(degree_cap));
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    UniPoly rest = part;
    for (const auto& r : rational_roots(part)) {
      const UniPoly lin({-r, 1});
      out.emplace_back(lin, mult);
      rest = rest.divmod(lin).first;
    }
    if (rest.degree() <= 0) continue;
    std::vector<UniPoly> irr;
    split_irreducible(from_integers(primitive(rest)), 2, irr);
    for (auto& g : irr) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

namespace {

UniPoly system_gcd(const std::vector<UniPoly>& system) {
  UniPoly d;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    d = d.is_zero() ? p.monic() : gcd(d, p);
  }
  return d;
}

}  // namespace

bool poly_consistency(const std::vector<UniPoly>& system) {
  const UniPoly d = system_gcd(system);
  return d.is_zero() || d.degree() > 0;
}

PolyPrimeType poly_prime_type(const std::vector<UniPoly>& system, int degree_cap) {
  PolyPrimeType t;
  t.gcd = system_gcd(system);
  if (t.gcd.is_zero()) return t;
  if (t.gcd.degree() == 0) throw Error(Errc::InconsistentSystem, "the system has no common root");
  const auto factors = factor_q(t.gcd, degree_cap);
  if (factors.size() == 1) {
    t.kind = PolyPrimeType::Kind::Maximal;
    t.minpoly = factors.front().first;
    return t;
  }
  t.kind = PolyPrimeType::Kind::NonPrime;
  for (const auto& [g, m] : factors) t.factors.push_back(g);
  return t;
}

}  // namespace ktypes::poly
