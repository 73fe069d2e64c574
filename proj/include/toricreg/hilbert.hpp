#pragma once

// Hilbert polynomials of the face rings S_sigma, found by exact Newton
// interpolation of fiber counts deep inside K, and of monomial quotients S/I
// as sums over a Stanley decomposition.

#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/polynomial.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

namespace detail {

/// All lambda in N^r with |lambda| <= deg, in graded order.
inline std::vector<IntVec> simplex_points(std::size_t r, Int deg) {
  std::vector<IntVec> out;
  IntVec cur(r, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int left) {
    if (k + 1 == r) {
      for (Int e = 0; e <= left; ++e) {
        cur[k] = e;
        out.push_back(cur);
      }
      cur[k] = 0;
      return;
    }
    for (Int e = 0; e <= left; ++e) {
      cur[k] = e;
      rec(k + 1, left - e);
    }
    cur[k] = 0;
  };
  rec(0, deg);
  return out;
}

inline Rational binomial_value(Int top, Int k) {
  if (k < 0 || top < k) return 0;
  Rational v = 1;
  for (Int i = 0; i < k; ++i) v = v * (top - i) / (i + 1);
  return v;
}

}  // namespace detail

struct FacePolynomial {
  MultiPoly poly;
  bool torsion = false;  // sigma-hat is not a face, so S_sigma is B-torsion
};

/// P_{S_sigma}(t) for the variable set sigma (sigma-hat = its complement).
inline FacePolynomial face_hilbert_polynomial_checked(const ToricVariety& x, IndexSet sigma, int max_attempts = 8) {
  const std::size_t n = x.n(), r = x.r();
  const IndexSet sigma_hat = sigma.complement(n);
  if (!x.is_face(sigma_hat)) return {MultiPoly(r), true};
  auto& cache = x.cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.polys.find(sigma.bits);
    if (it != cache.polys.end()) return {it->second, false};
  }

  const Int deg = static_cast<Int>(sigma.size()) - static_cast<Int>(r);
  const UnimodularMap u = positive_orthant_change(x);

  // Offset dominating every Koszul shift sum_{i in T} a_i, T inside sigma-hat.
  std::vector<IntVec> shifts;
  const auto hat = sigma_hat.indices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hat.size()); ++mask) {
    IntVec s(r, 0);
    for (std::size_t k = 0; k < hat.size(); ++k)
      if ((mask >> k) & 1U) s = linalg::add(s, x.degree_of(hat[k]));
    shifts.push_back(s);
  }
  IntVec offset = find_dominating(x.nef_cone(), shifts);

  const auto grid = detail::simplex_points(r, deg);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto sample = [&](const IntVec& lambda) {
      const IntVec t = linalg::add(offset, u.to_old(lambda));
      return Rational(face_hilbert_function(x, sigma, t));
    };
    std::map<IntVec, Rational> values;
    for (const auto& lam : grid) values[lam] = sample(lam);

    // Newton coefficients c_alpha = sum_{beta <= alpha} (-1)^{|alpha-beta|} prod binom(alpha_j, beta_j) f(beta).
    MultiPoly g(r);
    for (const auto& alpha : grid) {
      Rational c = 0;
      for (const auto& beta : grid) {
        bool below = true;
        Rational w = 1;
        Int diff = 0;
        for (std::size_t j = 0; j < r && below; ++j) {
          if (beta[j] > alpha[j]) below = false;
          else {
            w *= detail::binomial_value(alpha[j], beta[j]);
            diff += alpha[j] - beta[j];
          }
        }
        if (!below) continue;
        c += (diff % 2 == 0 ? w : Rational(-w)) * values[beta];
      }
      if (c == 0) continue;
      MultiPoly term = MultiPoly::constant(r, c);
      for (std::size_t j = 0; j < r; ++j) term = term * binomial(MultiPoly::variable(r, j), static_cast<int>(alpha[j]));
      g += term;
    }

    bool consistent = true;
    for (Int extra : {deg + 1, deg + 2}) {
      for (const auto& lam : detail::simplex_points(r, extra)) {
        Int sum = 0;
        for (Int v : lam) sum += v;
        if (sum != extra) continue;
        if (g.evaluate(lam) != sample(lam)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) break;
    }
    if (consistent) {
      // lambda = U^{-1} (t - offset)
      std::vector<MultiPoly> images;
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<Rational> row(u.inverse[j].begin(), u.inverse[j].end());
        images.push_back(MultiPoly::affine(row, -Rational(linalg::dot(u.inverse[j], offset))));
      }
      MultiPoly p = g.substitute(images);
      std::lock_guard lock(cache.mutex);
      cache.polys.emplace(sigma.bits, p);
      return {p, false};
    }
    const IntVec step = u.to_old(IntVec(r, Int{1} << attempt));
    offset = linalg::add(offset, step);
  }
  throw Error(ErrorKind::InterpolationInconsistent, "face ring " + sigma.to_string() + " did not stabilize");
}

inline MultiPoly face_hilbert_polynomial(const ToricVariety& x, IndexSet sigma) {
  return face_hilbert_polynomial_checked(x, sigma).poly;
}

/// Hilbert polynomial of the whole Cox ring.
inline MultiPoly ring_hilbert_polynomial(const ToricVariety& x) { return face_hilbert_polynomial(x, IndexSet::full(x.n())); }

/// Sum of P_{S_sigma}(t - A u) over the pairs whose sigma-hat is a face.
inline MultiPoly pairs_hilbert_polynomial(const ToricVariety& x, const std::vector<StanleyPair>& pairs) {
  MultiPoly sum(x.r());
  for (const auto& p : pairs) {
    if (!x.is_face(p.face.complement(x.n()))) continue;
    sum += face_hilbert_polynomial(x, p.face).shifted(x.degree(p.shift.exponents));
  }
  return sum;
}

inline MultiPoly quotient_hilbert_polynomial(const ToricVariety& x, const MonomialIdeal& i,
                                             const VariableChoice& strategy = default_strategy()) {
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/S has Hilbert polynomial 0 and no decomposition");
  return pairs_hilbert_polynomial(x, stanley_decompose(i, strategy).filtration());
}

}  // namespace toricreg
