#pragma once

// Stanley decompositions and filtrations of S/I built by the comma-colon
// recursion I -> (I + <x_l>, I : x_l), plus exact verification.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

/// The monomials x^{u+v} with supp(v) inside `face`.
struct StanleyPair {
  Monomial shift;
  IndexSet face;

  bool contains(const Monomial& m) const {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] < shift[i]) return false;
      if (!face.contains(i) && m[i] != shift[i]) return false;
    }
    return true;
  }

  friend bool operator==(const StanleyPair&, const StanleyPair&) = default;
  friend auto operator<=>(const StanleyPair& a, const StanleyPair& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.face <=> b.face;
  }

  /// `(x1^2*x2, {2,3})`.
  std::string to_string() const { return "(" + shift.to_string() + ", " + face.to_string() + ")"; }
};

/// Whether the two pairs share a monomial.
inline bool pairs_overlap(const StanleyPair& a, const StanleyPair& b) {
  for (std::size_t i = 0; i < a.shift.nvars(); ++i) {
    const bool fa = a.face.contains(i), fb = b.face.contains(i);
    const int u = a.shift[i], v = b.shift[i];
    if (!fa && !fb && u != v) return false;
    if (!fa && fb && v > u) return false;
    if (fa && !fb && u > v) return false;
  }
  return true;
}

/// Picks the branching variable for a non-prime node ideal.
using VariableChoice = std::function<std::size_t(const MonomialIdeal&)>;

struct StanleyTree {
  struct Node {
    MonomialIdeal ideal;
    Monomial label;                       // product of branch labels from the root
    std::optional<std::size_t> variable;  // set on internal nodes
    int left = -1, right = -1;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  /// Leaves in depth-first order, left children first.
  std::vector<StanleyPair> filtration() const {
    std::vector<StanleyPair> out;
    std::function<void(int)> walk = [&](int k) {
      const Node& nd = nodes[static_cast<std::size_t>(k)];
      if (!nd.variable) {
        out.push_back({nd.label, nd.ideal.prime_variables().complement(nd.ideal.nvars())});
        return;
      }
      walk(nd.left);
      walk(nd.right);
    };
    if (!nodes.empty()) walk(0);
    return out;
  }
};

/// Variables dividing some minimal generator of degree >= 2.
inline bool properly_divides(const MonomialIdeal& i, std::size_t v) {
  for (const auto& g : i.generators())
    if (g[v] > 0 && g.total_degree() >= 2) return true;
  return false;
}

inline StanleyTree stanley_decompose(const MonomialIdeal& root, const VariableChoice& choose) {
  if (root.is_unit()) throw Error(ErrorKind::UnitIdeal, "S/S has no Stanley decomposition");
  StanleyTree tree;
  const std::size_t n = root.nvars();
  std::function<int(MonomialIdeal, Monomial)> build = [&](MonomialIdeal ideal, Monomial label) -> int {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({ideal, label, std::nullopt, -1, -1});
    if (ideal.is_prime()) return id;
    const std::size_t v = choose(ideal);
    if (v >= n || !properly_divides(ideal, v))
      throw Error(ErrorKind::StrategyInvalid, "variable x" + std::to_string(v + 1) + " does not properly divide a generator of " + ideal.to_string());
    tree.nodes[static_cast<std::size_t>(id)].variable = v;
    const Monomial xv = Monomial::variable(n, v);
    const int l = build(add_monomial(ideal, xv), label);
    tree.nodes[static_cast<std::size_t>(id)].left = l;
    const int r = build(colon_by_monomial(ideal, xv), label * xv);
    tree.nodes[static_cast<std::size_t>(id)].right = r;
    return id;
  };
  build(root, Monomial(n));
  return tree;
}

/// The largest variable dividing the lexicographically largest minimal
/// generator that is not a variable.
inline VariableChoice default_strategy() {
  return [](const MonomialIdeal& i) -> std::size_t {
    for (const auto& g : i.generators()) {  // lexicographically decreasing
      if (g.total_degree() < 2) continue;
      return g.support().indices().back();
    }
    throw Error(ErrorKind::StrategyInvalid, "ideal " + i.to_string() + " is prime");
  };
}

/// Replays a fixed list of (0-based) variables in tree preorder.
inline VariableChoice replay_strategy(std::vector<std::size_t> choices) {
  auto state = std::make_shared<std::pair<std::vector<std::size_t>, std::size_t>>(std::move(choices), 0);
  return [state](const MonomialIdeal& i) -> std::size_t {
    if (state->second >= state->first.size())
      throw Error(ErrorKind::StrategyInvalid, "choice script exhausted at " + i.to_string());
    return state->first[state->second++];
  };
}

/// Total order on the complements sigma-hat of faces.
struct FaceOrder {
  std::vector<IndexSet> order;  // sigma-hat, smallest first
  std::unordered_map<std::uint64_t, std::size_t> rank;

  explicit FaceOrder(std::vector<IndexSet> o = {}) : order(std::move(o)) {
    for (std::size_t k = 0; k < order.size(); ++k) rank[order[k].bits] = k;
  }
  std::size_t rank_of(IndexSet sigma_hat) const { return rank.at(sigma_hat.bits); }
  bool contains(IndexSet sigma_hat) const { return rank.count(sigma_hat.bits) != 0; }
};

/// Branches on the smallest sigma-hat (in `ord`) whose prime strictly
/// contains the node ideal; smallest admissible index otherwise.
inline VariableChoice nice_strategy(const ToricVariety& x, const FaceOrder& ord) {
  const std::size_t n = x.n();
  return [n, ord](const MonomialIdeal& i) -> std::size_t {
    for (IndexSet sigma_hat : ord.order) {
      const MonomialIdeal p = MonomialIdeal::prime(n, sigma_hat);
      if (!p.contains(i) || p == i) continue;
      for (auto v : sigma_hat.indices())
        if (properly_divides(i, v)) return v;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (properly_divides(i, v)) return v;
    throw Error(ErrorKind::StrategyInvalid, "ideal " + i.to_string() + " is prime");
  };
}

enum class VerifyMode { Decomposition, Filtration };

struct VerifyResult {
  bool ok = true;
  std::optional<Monomial> counterexample;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline void for_each_monomial_in_box(const std::vector<int>& hi, const std::function<bool(const Monomial&)>& f) {
  Monomial m(hi.size());
  while (true) {
    if (!f(m)) return;
    std::size_t j = 0;
    while (j < hi.size() && m.exponents[j] == hi[j]) m.exponents[j++] = 0;
    if (j == hi.size()) return;
    ++m.exponents[j];
  }
}

inline void for_each_monomial_up_to(std::size_t n, int bound, const std::function<bool(const Monomial&)>& f) {
  Monomial m(n);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t k, int left) -> bool {
    if (k == n) return f(m);
    for (int e = 0; e <= left; ++e) {
      m.exponents[k] = e;
      if (!rec(k + 1, left - e)) return false;
    }
    m.exponents[k] = 0;
    return true;
  };
  rec(0, bound);
}

inline VerifyResult check_partition(const MonomialIdeal& ideal, const std::vector<StanleyPair>& pairs, std::size_t prefix,
                                    const std::vector<int>& box, std::optional<int> bound) {
  VerifyResult res;
  auto visit = [&](const Monomial& m) {
    const bool in_ideal = ideal.contains(m);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < prefix; ++k)
      if (pairs[k].contains(m)) ++hits;
    if ((in_ideal && hits != 0) || (!in_ideal && hits != 1)) {
      res.ok = false;
      res.counterexample = m;
      res.reason = m.to_string() + (in_ideal ? " lies in the ideal but is covered " : " is covered ") +
                   std::to_string(hits) + " times";
      return false;
    }
    return true;
  };
  if (bound)
    for_each_monomial_up_to(ideal.nvars(), *bound, visit);
  else
    for_each_monomial_in_box(box, visit);
  return res;
}

}  // namespace detail

/// Checks the pairs against I. Without a bound the check runs over the exponent
/// box [0, E_i + 1]^n (E_i the largest exponent of x_i among generators and
/// shifts), which is exhaustive since membership is constant beyond it.
inline VerifyResult verify_stanley(const MonomialIdeal& i, const std::vector<StanleyPair>& pairs, VerifyMode mode,
                                   std::optional<int> bound = std::nullopt) {
  const std::size_t n = i.nvars();
  std::vector<int> box(n);
  for (std::size_t v = 0; v < n; ++v) {
    int e = i.max_exponent(v);
    for (const auto& p : pairs) e = std::max(e, p.shift[v]);
    box[v] = e + 1;
  }
  if (mode == VerifyMode::Decomposition) return detail::check_partition(i, pairs, pairs.size(), box, bound);
  for (std::size_t j = pairs.size(); j-- > 0;) {
    MonomialIdeal later = i;
    for (std::size_t k = j + 1; k < pairs.size(); ++k) later = add_monomial(later, pairs[k].shift);
    auto res = detail::check_partition(later, pairs, j + 1, box, bound);
    if (!res) {
      res.reason = "prefix " + std::to_string(j + 1) + ": " + res.reason;
      return res;
    }
  }
  if (pairs.empty() && !i.is_unit()) return {false, Monomial(n), "no pairs for a proper ideal"};
  return {};
}

/// The intersection of <x_i^{u_i+1} : i not in sigma> over the pairs.
inline MonomialIdeal decomposition_to_ideal(std::size_t n, const std::vector<StanleyPair>& pairs) {
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      if (pairs_overlap(pairs[a], pairs[b]))
        throw Error(ErrorKind::OverlappingPairs, pairs[a].to_string() + " meets " + pairs[b].to_string());
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& p : pairs) {
    IrreducibleComponent c{std::vector<int>(n, 0)};
    for (std::size_t v = 0; v < n; ++v)
      if (!p.face.contains(v)) c.exponents[v] = p.shift[v] + 1;
    acc = intersect(acc, c.ideal());
  }
  return acc;
}

}  // namespace toricreg
