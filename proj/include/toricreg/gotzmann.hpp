#pragma once

// Standard-graded case: Gotzmann binomial representations
// P(t) = sum_i binom(t + q_i - (i-1), q_i), saturated lexicographic ideals and
// their Stanley filtrations.

#include <string>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/polynomial.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

/// binom(t + q - s, q) in one variable.
inline MultiPoly binomial_term(int q, int s) {
  return binomial(MultiPoly::variable(1, 0) + MultiPoly::constant(1, q - s), q);
}

struct GotzmannRep {
  std::vector<int> q;
  std::size_t length() const { return q.size(); }

  MultiPoly polynomial() const {
    MultiPoly p(1);
    for (std::size_t i = 0; i < q.size(); ++i) p += binomial_term(q[i], static_cast<int>(i));
    return p;
  }
};

inline GotzmannRep gotzmann_representation(const MultiPoly& p, std::size_t max_terms = 100000) {
  if (p.nvars() != 1) throw Error(ErrorKind::NotAHilbertPolynomial, "expected a polynomial in one variable");
  GotzmannRep rep;
  MultiPoly rest = p;
  const GradedOrder ord = GradedOrder::glex(1);
  while (!rest.is_zero()) {
    if (rep.q.size() >= max_terms) throw Error(ErrorKind::NotAHilbertPolynomial, "representation exceeds the term cap");
    if (!leading_coeff_positive(rest, ord))
      throw Error(ErrorKind::NotAHilbertPolynomial, to_string(p) + " leaves residual " + to_string(rest));
    const int q = rest.total_degree();
    if (!rep.q.empty() && q > rep.q.back())
      throw Error(ErrorKind::NotAHilbertPolynomial, to_string(p) + " has an increasing binomial degree");
    rest -= binomial_term(q, static_cast<int>(rep.q.size()));
    rep.q.push_back(q);
  }
  return rep;
}

/// P = sum binom(t + q_i - u_i, q_i) with q weakly decreasing.
struct BinomialRepresentation {
  std::vector<int> q;
  std::vector<int> u;
  friend bool operator==(const BinomialRepresentation&, const BinomialRepresentation&) = default;
};

/// Every representation with 0 <= u_i <= i-1 (0-based: u_i <= i) and at most
/// max_m terms. Each term has a positive leading coefficient, so the next q
/// must equal the degree of the residual; only the u_i branch. A term with
/// q_i = 0 is 1 for every u_i and is listed once, with u_i = i.
inline std::vector<BinomialRepresentation> enumerate_binomial_representations(const MultiPoly& p, std::size_t max_m) {
  std::vector<BinomialRepresentation> out;
  const GradedOrder ord = GradedOrder::glex(1);
  BinomialRepresentation cur;
  std::function<void(const MultiPoly&)> rec = [&](const MultiPoly& rest) {
    if (rest.is_zero()) {
      if (!cur.q.empty()) out.push_back(cur);
      return;
    }
    if (cur.q.size() == max_m || !leading_coeff_positive(rest, ord)) return;
    const int q = rest.total_degree();
    if (!cur.q.empty() && q > cur.q.back()) return;
    const int i = static_cast<int>(cur.q.size());
    for (int u = q == 0 ? i : 0; u <= i; ++u) {
      cur.q.push_back(q);
      cur.u.push_back(u);
      rec(rest - binomial_term(q, u));
      cur.q.pop_back();
      cur.u.pop_back();
    }
  };
  if (p.nvars() == 1) rec(p);
  return out;
}

struct LexIdeal {
  MonomialIdeal ideal;
  std::vector<StanleyPair> filtration;
  GotzmannRep rep;
  int ell = 0;
  std::vector<int> b;  // b_1..b_ell
};

/// Saturated lexicographic ideal of k[x_1..x_n] with Hilbert polynomial P.
inline LexIdeal lex_ideal(const MultiPoly& p, std::size_t n) {
  LexIdeal out;
  out.rep = gotzmann_representation(p);
  const auto& q = out.rep.q;
  if (q.empty() || n < 2 || q[0] > static_cast<int>(n) - 2)
    throw Error(ErrorKind::NotRealizable, to_string(p) + " is not the polynomial of a subscheme of P^" + std::to_string(n - 1));
  const int ell = q[0] + 1;
  out.ell = ell;
  out.b.assign(static_cast<std::size_t>(ell), 0);
  for (int v : q) ++out.b[static_cast<std::size_t>(ell - 1 - v)];

  // 0-based: the variables x_{n-ell} .. x_{n-1} (1-based) are indices base .. n-2.
  const std::size_t base = n - static_cast<std::size_t>(ell) - 1;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < base; ++i) gens.push_back(Monomial::variable(n, i));
  Monomial prefix(n);
  for (int j = 1; j <= ell; ++j) {
    const std::size_t v = base + static_cast<std::size_t>(j - 1);
    const int bj = out.b[static_cast<std::size_t>(j - 1)];
    gens.push_back(prefix.times_variable(v, bj + 1));
    IndexSet face;
    for (std::size_t k = v + 1; k < n; ++k) face.insert(k);
    for (int i = 0; i < bj; ++i) out.filtration.push_back({prefix.times_variable(v, i), face});
    prefix = prefix.times_variable(v, bj);
  }
  gens.push_back(prefix);
  out.ideal = MonomialIdeal(n, gens);

  const ToricVariety pn = builtin::projective_space(n - 1);
  if (auto res = verify_stanley(out.ideal, out.filtration, VerifyMode::Filtration); !res)
    throw Error(ErrorKind::NotRealizable, "lexicographic filtration failed verification: " + res.reason);
  if (pairs_hilbert_polynomial(pn, out.filtration) != p || quotient_hilbert_polynomial(pn, out.ideal) != p)
    throw Error(ErrorKind::NotRealizable, "lexicographic ideal does not have Hilbert polynomial " + to_string(p));
  return out;
}

}  // namespace toricreg
