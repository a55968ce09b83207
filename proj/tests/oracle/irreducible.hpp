#pragma once

// Irreducibility over the rationals for monic integer polynomials of
// degree <= 4, by direct search. By Gauss's lemma a monic integer
// polynomial that factors over Q factors into monic integer polynomials, so
// it suffices to look for an integer root (degree <= 3) or, in degree 4, a
// monic integer quadratic factor x^2 + b x + c. Roots are bounded by
// R = 1 + max |a_i| (Cauchy), hence |b| <= 2R and |c| <= R^2.

#include <cstdlib>
#include <vector>

namespace oracle {

// Coefficients lowest degree first, leading coefficient 1.
inline bool divides_exactly(const std::vector<long long>& f, const std::vector<long long>& g) {
  std::vector<long long> r = f;
  const int dg = static_cast<int>(g.size()) - 1;  // g monic
  for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
    const long long q = r[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= q * g[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < dg; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

inline bool irreducible_monic(const std::vector<long long>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  long long bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::llabs(f[static_cast<std::size_t>(i)]));
  const long long R = bound + 1;
  for (long long r = -R; r <= R; ++r)
    if (divides_exactly(f, {-r, 1})) return false;
  if (d <= 3) return true;
  for (long long b = -2 * R; b <= 2 * R; ++b)
    for (long long c = -R * R; c <= R * R; ++c)
      if (divides_exactly(f, {c, b, 1})) return false;
  return true;
}

}  // namespace oracle
