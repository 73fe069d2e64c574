#pragma once

// Monomials and monomial ideals of the Cox ring S = k[x_1..x_n]: minimal
// generators, colon and sum, irreducible decomposition, B-saturation, and
// Hilbert functions by enumerating degree fibers.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/index_set.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents(n, 0) {}
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial variable(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.exponents[i] = 1;
    return m;
  }

  std::size_t nvars() const { return exponents.size(); }
  int operator[](std::size_t i) const { return exponents[i]; }
  int total_degree() const { return toricreg::total_degree(exponents); }
  bool is_one() const { return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; }); }

  IndexSet support() const {
    IndexSet s;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > 0) s.insert(i);
    return s;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > o.exponents[i]) return false;
    return true;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i) a.exponents[i] += b.exponents[i];
    return a;
  }
  Monomial times_variable(std::size_t i, int power = 1) const {
    Monomial m = *this;
    m.exponents[i] += power;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents <=> b.exponents; }

  /// `x1^2*x2`, or `1` for the unit monomial.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exponents[i] = std::max(a[i], b[i]);
  return m;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exponents[i] = std::min(a[i], b[i]);
  return m;
}

/// a / gcd(a, b).
inline Monomial strip(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) m.exponents[i] = std::max(0, a[i] - b[i]);
  return m;
}

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.nvars() != n_) throw Error(ErrorKind::ParseError, "generator has the wrong number of variables");
    minimalize();
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }
  /// The prime generated by the variables in `vars`.
  static MonomialIdeal prime(std::size_t n, IndexSet vars) {
    std::vector<Monomial> gens;
    for (auto i : vars.indices()) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, gens);
  }

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Generated by variables (the zero ideal counts as the prime of the empty set).
  bool is_prime() const {
    return !is_unit() && std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.total_degree() == 1; });
  }
  /// For prime ideals: the generating variables.
  IndexSet prime_variables() const {
    IndexSet s;
    for (const auto& g : gens_) s = s | g.support();
    return s;
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }
  bool contains(const MonomialIdeal& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  int max_exponent(std::size_t i) const {
    int e = 0;
    for (const auto& g : gens_) e = std::max(e, g[i]);
    return e;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ <=> b.gens_; }

  /// `<x1^2*x2, x1*x2^2>`.
  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string();
    }
    return s + ">";
  }

 private:
  void minimalize() {
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
      const int da = a.total_degree(), db = b.total_degree();
      return da != db ? da < db : a < b;
    });
    std::vector<Monomial> kept;
    for (const auto& g : gens_) {
      if (std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); })) continue;
      kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    gens_ = std::move(kept);
  }

  std::size_t n_;
  std::vector<Monomial> gens_;  // minimal, lexicographically decreasing
};

inline MonomialIdeal add_monomial(const MonomialIdeal& i, const Monomial& m) {
  auto gens = i.generators();
  gens.push_back(m);
  return MonomialIdeal(i.nvars(), gens);
}

inline MonomialIdeal add_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), gens);
}

inline MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) gens.push_back(strip(g, m));
  return MonomialIdeal(i.nvars(), gens);
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), gens);
}

/// (I : m^infinity): drop every variable of supp(m) from the generators.
inline MonomialIdeal saturate_by_monomial(const MonomialIdeal& i, const Monomial& m) {
  const IndexSet supp = m.support();
  std::vector<Monomial> gens;
  for (auto g : i.generators()) {
    for (auto k : supp.indices()) g.exponents[k] = 0;
    gens.push_back(g);
  }
  return MonomialIdeal(i.nvars(), gens);
}

/// <x_i^{e_i} : e_i > 0>.
struct IrreducibleComponent {
  std::vector<int> exponents;

  IndexSet support() const {
    IndexSet s;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > 0) s.insert(i);
    return s;
  }
  MonomialIdeal ideal() const {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > 0) gens.push_back(Monomial::variable(exponents.size(), i).times_variable(i, exponents[i] - 1));
    return MonomialIdeal(exponents.size(), gens);
  }
  /// This component contains `o`.
  bool contains(const IrreducibleComponent& o) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (o.exponents[i] > 0 && (exponents[i] == 0 || exponents[i] > o.exponents[i])) return false;
    return true;
  }
  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) { return a.exponents <=> b.exponents; }
};

namespace detail {

inline void split_components(const MonomialIdeal& i, std::vector<IrreducibleComponent>& out) {
  for (const auto& g : i.generators()) {
    const auto supp = g.support().indices();
    if (supp.size() < 2) continue;
    const std::size_t v = supp[0];
    Monomial power(i.nvars()), rest = g;
    power.exponents[v] = g[v];
    rest.exponents[v] = 0;
    split_components(add_monomial(i, power), out);
    split_components(add_monomial(i, rest), out);
    return;
  }
  IrreducibleComponent c{std::vector<int>(i.nvars(), 0)};
  for (const auto& g : i.generators()) {
    const std::size_t v = g.support().indices()[0];
    c.exponents[v] = g[v];
  }
  out.push_back(c);
}

}  // namespace detail

/// Irredundant irreducible decomposition, sorted.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& i) {
  if (i.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no irreducible decomposition");
  std::vector<IrreducibleComponent> all;
  detail::split_components(i, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<IrreducibleComponent> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < all.size() && !redundant; ++b)
      redundant = b != a && all[a].contains(all[b]);
    if (!redundant) out.push_back(all[a]);
  }
  return out;
}

inline MonomialIdeal intersect_components(std::size_t n, const std::vector<IrreducibleComponent>& comps) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& c : comps) acc = intersect(acc, c.ideal());
  return acc;
}

struct SaturationResult {
  MonomialIdeal ideal;
  bool torsion_quotient = false;  // no component survived: S/I is B-torsion
};

/// (I : B^infinity), keeping the irreducible components supported on faces.
inline SaturationResult b_saturate_checked(const MonomialIdeal& i, const ToricVariety& x) {
  if (i.is_unit()) return {i, true};
  std::vector<IrreducibleComponent> kept;
  for (const auto& c : irreducible_decomposition(i))
    if (x.is_face(c.support())) kept.push_back(c);
  if (kept.empty()) return {MonomialIdeal::unit(i.nvars()), true};
  return {intersect_components(i.nvars(), kept), false};
}

inline MonomialIdeal b_saturate(const MonomialIdeal& i, const ToricVariety& x) { return b_saturate_checked(i, x).ideal; }

inline bool is_b_saturated(const MonomialIdeal& i, const ToricVariety& x) { return b_saturate(i, x) == i; }

/// (I : B^infinity) as the intersection of (I : (x^{sigma-hat})^infinity)
/// over the maximal cones; independent of the decomposition.
inline MonomialIdeal saturate_by_irrelevant(const MonomialIdeal& i, const ToricVariety& x) {
  MonomialIdeal acc = MonomialIdeal::unit(i.nvars());
  for (const auto& g : x.irrelevant_gens())
    if (g.minimal) acc = intersect(acc, saturate_by_monomial(i, Monomial(g.exponents)));
  return acc;
}

inline constexpr std::size_t kDefaultFiberCap = 10000000;

/// Calls f(exponents) for every u >= 0 with A u = t and supp(u) in `vars`.
/// When the columns of `vars` span Z^r-rationally, r of them are solved for
/// and only the rest are branched on.
inline void for_each_in_fiber(const ToricVariety& x, const IntVec& t, IndexSet vars,
                              const std::function<void(const std::vector<int>&)>& f,
                              std::size_t cap = kDefaultFiberCap) {
  const std::size_t n = x.n(), r = x.r();
  const IntVec& w = x.positive_functional();
  const Int wt = linalg::dot(w, t);
  if (wt < 0) return;
  const auto idx = vars.indices();
  std::vector<Int> wa(n);
  for (std::size_t i = 0; i < n; ++i) wa[i] = linalg::dot(w, x.degree_of(i));

  // Pick solved variables greedily from the end; they need an invertible block.
  std::vector<std::size_t> solved, free;
  IntMatrix cols;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (solved.size() < r) {
      IntMatrix trial = cols;
      trial.push_back(x.degree_of(*it));
      if (linalg::rank(trial) == trial.size()) {
        cols = std::move(trial);
        solved.push_back(*it);
        continue;
      }
    }
    free.push_back(*it);
  }
  std::reverse(free.begin(), free.end());

  std::vector<int> u(n, 0);
  IntVec remaining = t;
  std::size_t visited = 0;
  auto tick = [&] {
    if (++visited > cap) throw Error(ErrorKind::FiberTooLarge, "degree fiber search exceeded the cap");
  };

  if (solved.size() < r) {
    // Columns do not span: branch on everything and test the residual.
    std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int budget) {
      tick();
      if (k == idx.size()) {
        if (std::all_of(remaining.begin(), remaining.end(), [](Int v) { return v == 0; })) f(u);
        return;
      }
      const std::size_t i = idx[k];
      const IntVec a = x.degree_of(i);
      const Int max_e = budget / wa[i];
      for (Int e = 0; e <= max_e; ++e) {
        u[i] = static_cast<int>(e);
        rec(k + 1, budget - e * wa[i]);
        for (std::size_t j = 0; j < r; ++j) remaining[j] -= a[j];
      }
      for (std::size_t j = 0; j < r; ++j) remaining[j] += a[j] * (max_e + 1);
      u[i] = 0;
    };
    rec(0, wt);
    return;
  }

  // y = adj(B) rem / det(B) for the solved block B (columns = degrees).
  IntMatrix b(r, IntVec(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) b[i][j] = cols[j][i];
  const Rational det_q = linalg::determinant(b);
  const Int det = linalg::to_int(det_q);
  IntMatrix adj(r, IntVec(r));
  for (std::size_t j = 0; j < r; ++j) {
    IntVec e(r, 0);
    e[j] = 1;
    const auto col = linalg::solve(b, e);
    for (std::size_t i = 0; i < r; ++i) adj[i][j] = linalg::to_int(col[i] * det_q);
  }

  auto leaf = [&] {
    const IntVec num = linalg::apply(adj, remaining);
    for (std::size_t i = 0; i < r; ++i) {
      if (num[i] % det != 0) return;
      const Int y = num[i] / det;
      if (y < 0) return;
      u[solved[i]] = static_cast<int>(y);
    }
    f(u);
    for (auto i : solved) u[i] = 0;
  };
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int budget) {
    tick();
    if (k == free.size()) {
      leaf();
      return;
    }
    const std::size_t i = free[k];
    const IntVec a = x.degree_of(i);
    const Int max_e = budget / wa[i];
    for (Int e = 0; e <= max_e; ++e) {
      u[i] = static_cast<int>(e);
      rec(k + 1, budget - e * wa[i]);
      for (std::size_t j = 0; j < r; ++j) remaining[j] -= a[j];
    }
    for (std::size_t j = 0; j < r; ++j) remaining[j] += a[j] * (max_e + 1);
    u[i] = 0;
  };
  rec(0, wt);
}

inline std::vector<Monomial> fiber_monomials(const ToricVariety& x, const IntVec& t, std::size_t cap = kDefaultFiberCap) {
  std::vector<Monomial> out;
  for_each_in_fiber(x, t, IndexSet::full(x.n()), [&](const std::vector<int>& u) { out.emplace_back(u); }, cap);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Number of monomials of degree t that lie outside I.
inline std::size_t hilbert_function(const ToricVariety& x, const MonomialIdeal& i, const IntVec& t,
                                    std::size_t cap = kDefaultFiberCap) {
  std::size_t count = 0;
  Monomial m(x.n());
  for_each_in_fiber(x, t, IndexSet::full(x.n()), [&](const std::vector<int>& u) {
    m.exponents = u;
    if (!i.contains(m)) ++count;
  }, cap);
  return count;
}

/// Hilbert function of the face ring S_sigma = k[x_i : i in sigma].
inline std::size_t face_hilbert_function(const ToricVariety& x, IndexSet sigma, const IntVec& t,
                                         std::size_t cap = kDefaultFiberCap) {
  std::size_t count = 0;
  for_each_in_fiber(x, t, sigma, [&](const std::vector<int>&) { ++count; }, cap);
  return count;
}

}  // namespace toricreg
