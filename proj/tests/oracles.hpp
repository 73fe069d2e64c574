#pragma once

// Brute-force checks shared by the unit tests and the acceptance binary.

#include <random>
#include <set>
#include <vector>

#include "toricreg/toricreg.hpp"

namespace oracle {

using namespace toricreg;

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<std::size_t> g(1, max_gens);
  std::vector<Monomial> gens;
  for (std::size_t k = g(rng); k > 0; --k) {
    std::vector<int> u(n);
    for (auto& v : u) v = e(rng);
    if (total_degree(u) > 0) gens.emplace_back(u);
  }
  if (gens.empty()) gens.push_back(Monomial(n).times_variable(0));
  return MonomialIdeal(n, gens);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> u(n);
  for (auto& v : u) v = e(rng);
  return Monomial(u);
}

inline VariableChoice random_strategy(std::mt19937_64& rng) {
  return [&rng](const MonomialIdeal& j) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < j.nvars(); ++v)
      if (properly_divides(j, v)) vs.push_back(v);
    return vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
  };
}

// Number of pairs containing m, checked coordinate by coordinate.
inline std::size_t cover_count(const std::vector<StanleyPair>& pairs, const Monomial& m) {
  std::size_t c = 0;
  for (const auto& p : pairs) {
    bool in = true;
    for (std::size_t i = 0; i < m.nvars() && in; ++i)
      in = p.face.contains(i) ? m[i] >= p.shift[i] : m[i] == p.shift[i];
    c += in ? 1 : 0;
  }
  return c;
}

// Every monomial in the box [0, max exponent + 1]^n is in I or in exactly one
// pair, never both.
inline bool partitions_box(const MonomialIdeal& i, const std::vector<StanleyPair>& pairs) {
  const std::size_t n = i.nvars();
  std::vector<int> hi(n), u(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    hi[v] = i.max_exponent(v);
    for (const auto& p : pairs) hi[v] = std::max(hi[v], p.shift[v]);
    ++hi[v];
  }
  while (true) {
    const Monomial m(u);
    if (cover_count(pairs, m) != (i.contains(m) ? 0U : 1U)) return false;
    std::size_t v = 0;
    while (v < n && u[v] == hi[v]) u[v++] = 0;
    if (v == n) return true;
    ++u[v];
  }
}

// Standard monomials of degree t in k[x1,x2,x3], counted directly.
inline std::size_t plane_count_outside(const MonomialIdeal& i, int t) {
  std::size_t c = 0;
  for (int a = 0; a <= t; ++a)
    for (int b = 0; a + b <= t; ++b)
      if (!i.contains(Monomial({a, b, t - a - b}))) ++c;
  return c;
}

// Saturated ideals of k[x1,x2,x3] with Hilbert polynomial 3t+1: saturations of
// the ideals spanned by two quartics, kept when H(t) = 3t+1 on t = 9..12.
inline std::set<MonomialIdeal> plane_twisted_cubics(std::size_t& subsets) {
  const auto p2 = builtin::projective_space(2);
  std::vector<Monomial> quartics;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) quartics.push_back(Monomial({a, b, 4 - a - b}));
  std::set<MonomialIdeal> out;
  subsets = 0;
  for (std::size_t i = 0; i < quartics.size(); ++i)
    for (std::size_t j = i + 1; j < quartics.size(); ++j) {
      ++subsets;
      const MonomialIdeal sat = saturate_by_irrelevant(MonomialIdeal(3, {quartics[i], quartics[j]}), p2);
      bool ok = true;
      for (int t = 9; t <= 12; ++t) ok = ok && plane_count_outside(sat, t) == static_cast<std::size_t>(3 * t + 1);
      if (ok) out.insert(sat);
    }
  return out;
}

}  // namespace oracle
