#include "ktypes/poly/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ktypes/error.hpp"

namespace ktypes::poly {

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

unsigned Monomial::support() const {
  unsigned s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > 0) s |= 1u << i;
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = e[i] - divisor.e[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

bool Grevlex::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

MultiPoly MultiPoly::constant(Rational c) { return term(Monomial{}, std::move(c)); }

MultiPoly MultiPoly::variable(int i) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  return term(m, 1);
}

MultiPoly MultiPoly::term(Monomial m, Rational c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

const Monomial& MultiPoly::lead_monomial() const { return terms_.rbegin()->first; }
const Rational& MultiPoly::lead_coeff() const { return terms_.rbegin()->second; }

int MultiPoly::degree() const { return is_zero() ? -1 : lead_monomial().degree(); }

unsigned MultiPoly::variables() const {
  unsigned s = 0;
  for (const auto& [m, c] : terms_) s |= m.support();
  return s;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  MultiPoly p;
  const Rational l = lead_coeff();
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c / l);
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly p;
  for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, -c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      const int k = it->first.e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

UniPoly MultiPoly::to_univariate(int var) const {
  if ((variables() & ~(1u << var)) != 0)
    throw Error(Errc::InvalidArgument, "polynomial " + to_string() + " is not univariate in " + kVarNames[var]);
  std::vector<Rational> v(static_cast<std::size_t>(std::max(0, degree() + 1)), 0);
  for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(m.e[static_cast<std::size_t>(var)])] = c;
  return UniPoly(std::move(v));
}

MultiPoly MultiPoly::from_univariate(const UniPoly& p, int var) {
  MultiPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    Monomial m;
    m.e[static_cast<std::size_t>(var)] = k;
    out.add_term(m, p.coeff(k));
  }
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly rem, p = f;
  while (!p.is_zero()) {
    const Monomial lm = p.lead_monomial();
    const Rational lc = p.lead_coeff();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !g.lead_monomial().divides(lm)) continue;
      p = p - MultiPoly::term(lm / g.lead_monomial(), lc / g.lead_coeff()) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + MultiPoly::term(lm, lc);
      p = p - MultiPoly::term(lm, lc);
    }
  }
  return rem;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  return MultiPoly::term(l / f.lead_monomial(), Rational(1) / f.lead_coeff()) * f -
         MultiPoly::term(l / g.lead_monomial(), Rational(1) / g.lead_coeff()) * g;
}

std::vector<MultiPoly> groebner(const std::vector<MultiPoly>& gens, std::size_t max_basis) {
  std::vector<MultiPoly> g;
  for (const auto& p : gens) {
    if (p.degree() > kMaxGeneratorDegree)
      throw Error(Errc::CapExceeded, "generator degree " + std::to_string(p.degree()) + " exceeds " +
                                         std::to_string(kMaxGeneratorDegree));
    if (!p.is_zero()) g.push_back(p.monic());
  }
  // Buchberger with the coprime-leading-monomial criterion.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const Monomial& a = g[i].lead_monomial();
    const Monomial& b = g[j].lead_monomial();
    if (lcm(a, b) == a * b) continue;
    MultiPoly r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    if (g.size() >= max_basis) throw Error(Errc::CapExceeded, "Gröbner basis exceeds " + std::to_string(max_basis) + " elements");
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::vector<MultiPoly> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lead_monomial().divides(g[i].lead_monomial())) continue;
      redundant = !(g[j].lead_monomial() == g[i].lead_monomial()) || j < i;
    }
    if (!redundant) min.push_back(g[i]);
  }
  // Reduce every element modulo the others.
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    min[i] = normal_form(min[i], others).monic();
  }
  std::sort(min.begin(), min.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return Grevlex{}(b.lead_monomial(), a.lead_monomial());
  });
  return min;
}

Ideal::Ideal(std::vector<MultiPoly> gens) : gens_(std::move(gens)) {}

const std::vector<MultiPoly>& Ideal::basis() const {
  if (!basis_) basis_ = groebner(gens_);
  return *basis_;
}

bool Ideal::is_proper() const {
  const auto& b = basis();
  return !(b.size() == 1 && b.front().degree() == 0);
}

unsigned Ideal::variables() const {
  unsigned s = 0;
  for (const auto& g : gens_) s |= g.variables();
  return s;
}

bool ideal_member(const MultiPoly& f, const Ideal& i) { return normal_form(f, i.basis()).is_zero(); }

int ideal_dim(const Ideal& i, int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw Error(Errc::CapExceeded, "at most four variables");
  if ((i.variables() >> nvars) != 0) throw Error(Errc::InvalidArgument, "generator uses a variable outside the ring");
  if (!i.is_proper()) throw Error(Errc::ImproperIdeal, "the ideal contains 1");
  int best = 0;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    bool independent = true;
    for (const auto& g : i.basis())
      if ((g.lead_monomial().support() & ~s) == 0) independent = false;
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace ktypes::poly
