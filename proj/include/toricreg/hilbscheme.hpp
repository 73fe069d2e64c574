#pragma once

// Finite degree sets D for the multigraded Hilbert scheme: monomial ideals
// generated in the degrees of D with prescribed Hilbert values, and the
// iteration that grows D until every such ideal has the right polynomial.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toricreg/enumerate.hpp"
#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

inline constexpr std::size_t kDefaultNodeBudget = 5000000;

/// Monomial ideals generated by monomials whose degrees lie in D, with
/// H(S/I, t) = P(t) for every t in D.
inline std::vector<MonomialIdeal> ideals_generated_in_degrees(const ToricVariety& x, std::vector<IntVec> degrees,
                                                              const MultiPoly& p,
                                                              std::size_t budget = kDefaultNodeBudget) {
  const IntVec& w = x.positive_functional();
  std::sort(degrees.begin(), degrees.end(), [&](const IntVec& a, const IntVec& b) {
    const Int wa = linalg::dot(w, a), wb = linalg::dot(w, b);
    return wa != wb ? wa < wb : a < b;
  });
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  struct Level {
    std::vector<Monomial> fiber;
    std::size_t codim;  // monomials of degree t that must lie in I
  };
  std::vector<Level> levels;
  for (const auto& t : degrees) {
    Level lv{fiber_monomials(x, t), 0};
    const Rational value = p.evaluate(t);
    if (boost::multiprecision::denominator(value) != 1 || value < 0 || value > Rational(lv.fiber.size()))
      throw Error(ErrorKind::InfeasibleHilbertValue, "P takes the value " + rational_string(value) + " at a degree with " +
                                                         std::to_string(lv.fiber.size()) + " monomials");
    lv.codim = lv.fiber.size() - static_cast<std::size_t>(boost::multiprecision::numerator(value));
    levels.push_back(std::move(lv));
  }

  std::vector<MonomialIdeal> out;
  std::vector<Monomial> gens;
  std::size_t nodes = 0;
  auto tick = [&] {
    if (++nodes > budget) throw Error(ErrorKind::BudgetExceeded, "ideal enumeration exceeded its node budget");
  };
  std::function<void(std::size_t)> level_rec = [&](std::size_t k) {
    tick();
    if (k == levels.size()) {
      out.emplace_back(x.n(), gens);
      return;
    }
    const Level& lv = levels[k];
    const MonomialIdeal current(x.n(), gens);
    std::vector<const Monomial*> free;
    std::size_t forced = 0;
    for (const auto& m : lv.fiber) {
      if (current.contains(m))
        ++forced;
      else
        free.push_back(&m);
    }
    if (forced > lv.codim) return;
    const std::size_t need = lv.codim - forced;
    const std::size_t base = gens.size();
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t left) {
      if (left == 0) {
        level_rec(k + 1);
        return;
      }
      for (std::size_t i = start; i + left <= free.size(); ++i) {
        tick();
        gens.push_back(*free[i]);
        pick(i + 1, left - 1);
        gens.pop_back();
      }
    };
    pick(0, need);
    gens.resize(base, Monomial(x.n()));
  };
  level_rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Hilbert polynomial of S/I, with 0 for the unit ideal.
inline MultiPoly hilbert_polynomial_or_zero(const ToricVariety& x, const MonomialIdeal& i) {
  return i.is_unit() ? MultiPoly(x.r()) : quotient_hilbert_polynomial(x, i);
}

struct DegreeSetOptions {
  std::uint64_t seed = 1;
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t max_iterations = 16;
  Int witness_radius = 64;  // largest |lambda| tried when looking for H != P
  Int spread = 4;           // general points are drawn from c + U [0, spread]^r
};

struct DegreeSetIteration {
  std::size_t candidates = 0;
  std::size_t failing = 0;
  std::vector<IntVec> witnesses;
  IntVec bound;                  // regularity bound c for ideals generated in D (empty if not needed)
  std::vector<IntVec> general;   // points drawn from c + K
};

struct DegreeSetResult {
  std::vector<IntVec> points;  // D, in insertion order
  IntVec k;
  std::size_t gotzmann = 0;
  std::uint64_t seed = 0;
  std::vector<DegreeSetIteration> trace;
  bool fixpoint = false;
};

namespace detail {

inline std::size_t binomial_count(std::size_t n, std::size_t k) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

/// Whether the points impose independent conditions on polynomials of total
/// degree <= deg (up to the number of such monomials).
inline bool points_general(const std::vector<IntVec>& pts, std::size_t r, int deg) {
  std::vector<IntVec> exps;
  for (const auto& e : simplex_points(r, deg)) exps.push_back(e);
  linalg::RatMatrix m;
  for (const auto& p : pts) {
    std::vector<Rational> row;
    for (const auto& e : exps) {
      Rational v = 1;
      for (std::size_t j = 0; j < r; ++j)
        for (Int k = 0; k < e[j]; ++k) v *= p[j];
      row.push_back(v);
    }
    m.push_back(row);
  }
  return linalg::rref(m).size() == std::min(pts.size(), exps.size());
}

}  // namespace detail

/// Grows D from the regularity bound k until every monomial ideal generated
/// in D with the values of P on D has Hilbert polynomial P.
inline DegreeSetResult degree_set(const ToricVariety& x, const MultiPoly& p, const DegreeSetOptions& opt = {}) {
  DegreeSetResult res;
  res.seed = opt.seed;
  res.gotzmann = gotzmann_number(x, p);
  res.k = linalg::scale(find_c(x), static_cast<Int>(res.gotzmann) - 1);
  res.points.push_back(res.k);
  const UnimodularMap u = positive_orthant_change(x);
  const std::size_t r = x.r();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Int> coord(0, opt.spread);
  std::set<IntVec> in_d{res.k};
  auto add_point = [&](const IntVec& t) {
    if (in_d.insert(t).second) res.points.push_back(t);
  };

  for (std::size_t iter = 0; iter < opt.max_iterations; ++iter) {
    DegreeSetIteration step;
    const auto ideals = ideals_generated_in_degrees(x, res.points, p, opt.node_budget);
    step.candidates = ideals.size();
    for (const auto& ideal : ideals) {
      if (hilbert_polynomial_or_zero(x, ideal) == p) continue;
      ++step.failing;
      bool found = false;
      for (Int radius = 0; radius <= opt.witness_radius && !found; ++radius)
        for (const auto& lam : detail::simplex_points(r, radius)) {
          Int s = 0;
          for (Int v : lam) s += v;
          if (s != radius) continue;
          const IntVec t = linalg::add(res.k, u.to_old(lam));
          if (Rational(hilbert_function(x, ideal, t)) != p.evaluate(t)) {
            step.witnesses.push_back(t);
            found = true;
            break;
          }
        }
      if (!found) throw Error(ErrorKind::SearchExhausted, "no degree separates " + ideal.to_string() + " from P");
    }
    if (step.failing == 0) {
      res.trace.push_back(std::move(step));
      res.fixpoint = true;
      return res;
    }

    // Bound for ideals generated in D: dominate k and the degrees of the
    // corners of the box spanned by the monomials with degrees in D.
    std::vector<int> top(x.n(), 0);
    for (const auto& t : res.points)
      for (const auto& m : fiber_monomials(x, t))
        for (std::size_t i = 0; i < x.n(); ++i) top[i] = std::max(top[i], m[i]);
    std::vector<IntVec> targets{res.k};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.n()); ++mask) {
      std::vector<int> corner(x.n(), 0);
      for (std::size_t i = 0; i < x.n(); ++i)
        if ((mask >> i) & 1U) corner[i] = top[i];
      targets.push_back(x.degree(corner));
    }
    step.bound = find_dominating(x.nef_cone(), targets);

    const std::size_t want = detail::binomial_count(x.n(), x.d());
    const int deg = std::max(0, p.total_degree());
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw Error(ErrorKind::SearchExhausted, "could not draw general points");
      std::vector<IntVec> pts;
      std::set<IntVec> used(in_d);
      used.insert(step.bound);
      while (pts.size() < want) {
        IntVec lam(r);
        for (auto& v : lam) v = coord(rng);
        const IntVec t = linalg::add(step.bound, u.to_old(lam));
        if (used.insert(t).second) pts.push_back(t);
      }
      if (detail::points_general(pts, r, deg)) {
        step.general = pts;
        break;
      }
    }
    for (const auto& t : step.witnesses) add_point(t);
    add_point(step.bound);
    for (const auto& t : step.general) add_point(t);
    res.trace.push_back(std::move(step));
  }
  return res;
}

struct SupportiveReport {
  bool ok = true;
  std::size_t candidates = 0;
  std::size_t points_checked = 0;
  std::string failure;
};

/// Exhaustive monomial check of D: every ideal generated in D with the right
/// values on D has H(S/I, t) = P(t) on k + U [0, box]^r, and its saturation
/// has Hilbert polynomial P.
inline SupportiveReport verify_supportive(const ToricVariety& x, const MultiPoly& p, const DegreeSetResult& d, Int box,
                                          std::size_t budget = kDefaultNodeBudget) {
  SupportiveReport rep;
  const UnimodularMap u = positive_orthant_change(x);
  const auto ideals = ideals_generated_in_degrees(x, d.points, p, budget);
  rep.candidates = ideals.size();
  std::vector<IntVec> sample;
  IntVec lam(x.r(), 0);
  while (true) {
    sample.push_back(linalg::add(d.k, u.to_old(lam)));
    std::size_t j = 0;
    while (j < lam.size() && lam[j] == box) lam[j++] = 0;
    if (j == lam.size()) break;
    ++lam[j];
  }
  for (const auto& ideal : ideals) {
    for (const auto& t : sample) {
      ++rep.points_checked;
      if (Rational(hilbert_function(x, ideal, t)) != p.evaluate(t)) {
        rep.ok = false;
        rep.failure = ideal.to_string() + " has the wrong Hilbert value in degree (" + std::to_string(t[0]) + ",...)";
        return rep;
      }
    }
    const MonomialIdeal sat = ideal.is_unit() ? ideal : b_saturate(ideal, x);
    if (hilbert_polynomial_or_zero(x, sat) != p) {
      rep.ok = false;
      rep.failure = "saturation of " + ideal.to_string() + " has the wrong Hilbert polynomial";
      return rep;
    }
  }
  return rep;
}

}  // namespace toricreg
