#pragma once

// Enumeration of all B-saturated monomial ideals with a prescribed
// multigraded Hilbert polynomial by peeling shifted face polynomials off the
// leading term, and the resulting Gotzmann numbers.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/polynomial.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

/// Faces sigma-hat sorted by decreasing initial term of P_{S_sigma}; ties by
/// larger sigma-hat first, then lexicographically.
inline FaceOrder graded_total_order(const ToricVariety& x, const GradedOrder& ord) {
  struct Entry {
    IndexSet hat;
    Exponent lead;
  };
  std::vector<Entry> entries;
  for (IndexSet hat : x.faces())
    entries.push_back({hat, leading_term(face_hilbert_polynomial(x, hat.complement(x.n())), ord).exponent});
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (ord.less(b.lead, a.lead)) return true;
    if (ord.less(a.lead, b.lead)) return false;
    if (a.hat.size() != b.hat.size()) return a.hat.size() > b.hat.size();
    return a.hat < b.hat;
  });
  std::vector<IndexSet> order;
  for (const auto& e : entries) order.push_back(e.hat);
  return FaceOrder(order);
}

struct EnumeratedIdeal {
  MonomialIdeal ideal;
  std::vector<StanleyPair> pairs;  // representation in the order the pairs were accepted
};

struct EnumerationResult {
  std::vector<EnumeratedIdeal> ideals;  // sorted by ideal
  std::size_t representations = 0;      // complete representations found
  std::size_t gotzmann_number = 0;      // largest representation
  std::size_t gotzmann_number_realized = 0;  // largest representation of a surviving ideal
  UnimodularMap change;
  FaceOrder order;
};

struct EnumerationLimits {
  std::size_t max_states = 20000000;
};

namespace detail {

struct FaceData {
  IndexSet face;  // sigma
  IndexSet hat;
  MultiPoly poly;
  Exponent lead;
  Rational lead_coeff;
};

inline std::vector<FaceData> face_data(const ToricVariety& xc, const FaceOrder& order, const GradedOrder& ord) {
  std::vector<FaceData> out;
  for (IndexSet hat : order.order) {
    const IndexSet face = hat.complement(xc.n());
    MultiPoly p = face_hilbert_polynomial(xc, face);
    const LeadingTerm lt = leading_term(p, ord);
    out.push_back({face, hat, p, lt.exponent, lt.coefficient});
  }
  return out;
}

inline void assert_decreasing(const LeadingTerm& before, const MultiPoly& after, const GradedOrder& ord) {
  if (after.is_zero()) return;
  const LeadingTerm lt = leading_term(after, ord);
  const bool smaller = ord.less(lt.exponent, before.exponent) ||
                       (lt.exponent == before.exponent && lt.coefficient < before.coefficient);
  if (!smaller) throw std::logic_error("enumeration measure did not decrease");
}

}  // namespace detail

inline EnumerationResult enumerate_saturated_ideals(const ToricVariety& x, const MultiPoly& p,
                                                    const GradedOrder& ord,
                                                    const EnumerationLimits& limits = {}) {
  EnumerationResult result;
  result.change = positive_orthant_change(x);
  const ToricVariety xc = result.change.is_identity() ? x : x.in_coordinates(result.change);
  const MultiPoly pc = p.linear_change(result.change.matrix);
  result.order = graded_total_order(xc, ord);
  if (pc.is_zero()) return result;
  const auto faces = detail::face_data(xc, result.order, ord);
  const std::size_t n = x.n();

  struct State {
    std::vector<StanleyPair> pairs;
    std::vector<std::size_t> ranks;
    MultiPoly residual;
  };
  auto key_of = [](std::vector<StanleyPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  };

  std::set<std::vector<StanleyPair>> seen;
  std::map<std::vector<StanleyPair>, std::vector<StanleyPair>> reps;  // key -> first ordering found
  std::vector<State> stack;
  stack.push_back({{}, {}, pc});
  std::size_t states = 0;

  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    if (++states > limits.max_states) throw Error(ErrorKind::BudgetExceeded, "enumeration state budget exhausted");
    const LeadingTerm lt = leading_term(st.residual, ord);

    for (std::size_t k = 0; k < faces.size(); ++k) {
      const auto& tau = faces[k];
      if (tau.lead != lt.exponent) continue;
      std::set<Monomial> shifts;
      if (st.pairs.empty()) {
        shifts.insert(Monomial(n));
      } else {
        for (std::size_t j = 0; j < st.pairs.size(); ++j) {
          if (st.ranks[j] > k) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (!st.pairs[j].face.contains(l)) shifts.insert(st.pairs[j].shift.times_variable(l));
        }
      }
      for (const auto& v : shifts) {
        const StanleyPair cand{v, tau.face};
        bool overlap = false;
        for (const auto& q : st.pairs) overlap = overlap || pairs_overlap(q, cand);
        if (overlap) continue;
        MultiPoly next = st.residual - tau.poly.shifted(xc.degree(v.exponents));
        if (!next.is_zero() && !leading_coeff_positive(next, ord)) continue;
        detail::assert_decreasing(lt, next, ord);
        State child{st.pairs, st.ranks, std::move(next)};
        child.pairs.push_back(cand);
        child.ranks.push_back(k);
        auto key = key_of(child.pairs);
        if (!seen.insert(key).second) continue;
        if (child.residual.is_zero()) {
          reps.emplace(std::move(key), child.pairs);
        } else {
          stack.push_back(std::move(child));
        }
      }
    }
  }

  std::map<MonomialIdeal, std::vector<StanleyPair>> found;
  result.representations = reps.size();
  for (const auto& [key, pairs] : reps) {
    result.gotzmann_number = std::max(result.gotzmann_number, pairs.size());
    MonomialIdeal ideal = decomposition_to_ideal(n, pairs);
    if (ideal.is_unit() || quotient_hilbert_polynomial(xc, ideal) != pc) continue;
    result.gotzmann_number_realized = std::max(result.gotzmann_number_realized, pairs.size());
    auto it = found.find(ideal);
    if (it == found.end())
      found.emplace(std::move(ideal), pairs);
    else if (pairs < it->second)
      it->second = pairs;
  }
  for (auto& [ideal, pairs] : found) result.ideals.push_back({ideal, pairs});
  return result;
}

inline EnumerationResult enumerate_saturated_ideals(const ToricVariety& x, const MultiPoly& p) {
  return enumerate_saturated_ideals(x, p, GradedOrder::glex(x.r()));
}

inline std::size_t gotzmann_number(const ToricVariety& x, const MultiPoly& p) {
  const auto res = enumerate_saturated_ideals(x, p);
  if (res.representations == 0) throw Error(ErrorKind::NoRepresentation, "no representation of " + to_string(p));
  return res.gotzmann_number;
}

inline std::size_t gotzmann_number_realized(const ToricVariety& x, const MultiPoly& p) {
  const auto res = enumerate_saturated_ideals(x, p);
  if (res.ideals.empty()) throw Error(ErrorKind::NoRepresentation, "no saturated ideal has polynomial " + to_string(p));
  return res.gotzmann_number_realized;
}

/// Longest sequence (q_i, sigma_i) with q_1 = 0, q_i = q_j + a_l for some
/// earlier j with l not in sigma_j and sigma-hat_j before sigma-hat_i, and
/// P = sum P_{S_sigma_i}(t - q_i); no disjointness of monomial pairs.
inline std::size_t gotzmann_upper_bound(const ToricVariety& x, const MultiPoly& p, const EnumerationLimits& limits = {}) {
  const GradedOrder ord = GradedOrder::glex(x.r());
  const UnimodularMap change = positive_orthant_change(x);
  const ToricVariety xc = change.is_identity() ? x : x.in_coordinates(change);
  const MultiPoly pc = p.linear_change(change.matrix);
  const FaceOrder order = graded_total_order(xc, ord);
  if (pc.is_zero()) throw Error(ErrorKind::NoRepresentation, "zero polynomial");
  const auto faces = detail::face_data(xc, order, ord);
  const std::size_t n = x.n();

  using Term = std::pair<IntVec, std::size_t>;  // (degree shift, face rank)
  struct State {
    std::vector<Term> terms;
    MultiPoly residual;
  };
  std::set<std::vector<Term>> seen;
  std::vector<State> stack{{{}, pc}};
  std::size_t best = 0, states = 0;
  bool any = false;
  while (!stack.empty()) {
    State st = std::move(stack.back());
    stack.pop_back();
    if (++states > limits.max_states) throw Error(ErrorKind::BudgetExceeded, "bound search state budget exhausted");
    const LeadingTerm lt = leading_term(st.residual, ord);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (faces[k].lead != lt.exponent) continue;
      std::set<IntVec> shifts;
      if (st.terms.empty()) {
        shifts.insert(IntVec(xc.r(), 0));
      } else {
        for (const auto& [q, rank] : st.terms) {
          if (rank > k) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (!faces[rank].face.contains(l)) shifts.insert(linalg::add(q, xc.degree_of(l)));
        }
      }
      for (const auto& q : shifts) {
        MultiPoly next = st.residual - faces[k].poly.shifted(q);
        if (!next.is_zero() && !leading_coeff_positive(next, ord)) continue;
        detail::assert_decreasing(lt, next, ord);
        State child{st.terms, std::move(next)};
        child.terms.emplace_back(q, k);
        auto key = child.terms;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        if (child.residual.is_zero()) {
          any = true;
          best = std::max(best, child.terms.size());
        } else {
          stack.push_back(std::move(child));
        }
      }
    }
  }
  if (!any) throw Error(ErrorKind::NoRepresentation, "no representation of " + to_string(p));
  return best;
}

}  // namespace toricreg
