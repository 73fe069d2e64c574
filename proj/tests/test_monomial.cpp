#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "toricreg/monomial.hpp"

using namespace toricreg;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_exp, int count) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    std::vector<int> u(n);
    for (auto& v : u) v = e(rng);
    gens.emplace_back(u);
  }
  return MonomialIdeal(n, gens);
}

template <class F>
void each_in_box(std::size_t n, int bound, F f) {
  std::vector<int> u(n, 0);
  while (true) {
    f(Monomial(u));
    std::size_t j = 0;
    while (j < n && u[j] == bound) u[j++] = 0;
    if (j == n) return;
    ++u[j];
  }
}

}  // namespace

TEST_CASE("generators are minimal and sorted", "[monomial]") {
  const MonomialIdeal i(3, {Monomial({1, 1, 0}), Monomial({2, 1, 0}), Monomial({0, 0, 3}), Monomial({1, 1, 0})});
  CHECK(i.generators().size() == 2);
  CHECK(i.to_string() == "<x1*x2, x3^3>");
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(MonomialIdeal::zero(3).to_string() == "<>");
  CHECK(MonomialIdeal::prime(3, IndexSet::of({0, 2})).is_prime());
  CHECK_FALSE(i.is_prime());
  CHECK(i.max_exponent(2) == 3);
}

TEST_CASE("colon and intersection agree with membership", "[monomial]") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const auto a = random_ideal(rng, 3, 3, 3), b = random_ideal(rng, 3, 3, 2);
    const Monomial f = random_ideal(rng, 3, 2, 1).generators()[0];
    const auto colon = colon_by_monomial(a, f);
    const auto meet = intersect(a, b);
    const auto sum = add_ideals(a, b);
    each_in_box(3, 6, [&](const Monomial& m) {
      CHECK(colon.contains(m) == a.contains(m * f));
      CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
      CHECK(sum.contains(m) == (a.contains(m) || b.contains(m)));
    });
  }
}

TEST_CASE("irreducible decompositions recover the ideal", "[monomial]") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    const auto i = random_ideal(rng, 4, 3, 4);
    if (i.is_unit()) continue;
    const auto comps = irreducible_decomposition(i);
    CHECK(intersect_components(4, comps) == i);
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = 0; b < comps.size(); ++b)
        if (a != b) CHECK_FALSE(comps[a].contains(comps[b]));
  }
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(2)), Error);
  const MonomialIdeal two(2, {Monomial({2, 1}), Monomial({1, 2})});
  const auto comps = irreducible_decomposition(two);
  CHECK(comps == std::vector<IrreducibleComponent>{{{0, 1}}, {{1, 0}}, {{2, 2}}});
}

TEST_CASE("B-saturation matches the per-generator saturation", "[monomial]") {
  std::mt19937_64 rng(13);
  const std::vector<ToricVariety> xs = {builtin::projective_space(2), builtin::hirzebruch(2), builtin::product(2, 1)};
  for (const auto& x : xs)
    for (int rep = 0; rep < 40; ++rep) {
      const auto i = random_ideal(rng, x.n(), 3, 3);
      if (i.is_unit()) continue;
      const auto sat = b_saturate(i, x);
      CHECK(sat == saturate_by_irrelevant(i, x));
      CHECK(sat.contains(i));
      CHECK(is_b_saturated(sat, x));
    }
}

TEST_CASE("B-torsion quotients saturate to the unit ideal", "[monomial]") {
  const auto p2 = builtin::projective_space(2);
  const auto res = b_saturate_checked(MonomialIdeal(3, {Monomial({2, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1})}), p2);
  CHECK(res.torsion_quotient);
  CHECK(res.ideal.is_unit());
  // <x4^2> meet <x1,x2,x3>: both supports are faces of P^3
  const auto p3 = builtin::projective_space(3);
  const MonomialIdeal ex(4, {Monomial({1, 0, 0, 2}), Monomial({0, 1, 0, 2}), Monomial({0, 0, 1, 2})});
  CHECK(is_b_saturated(ex, p3));
}

TEST_CASE("degree fibers match a box search", "[monomial]") {
  const std::vector<ToricVariety> xs = {builtin::projective_space(2), builtin::hirzebruch(2), builtin::product(1, 1)};
  for (const auto& x : xs) {
    const std::vector<IntVec> degs = x.r() == 1 ? std::vector<IntVec>{{0}, {1}, {3}, {5}}
                                                : std::vector<IntVec>{{0, 0}, {1, 1}, {3, 2}, {-1, 2}, {2, -1}, {4, 4}};
    for (const auto& d : degs) {
      std::set<Monomial> brute;
      each_in_box(x.n(), 12, [&](const Monomial& m) {
        if (x.degree(m.exponents) == d) brute.insert(m);
      });
      const auto fib = fiber_monomials(x, d);
      CHECK(std::set<Monomial>(fib.begin(), fib.end()) == brute);
      CHECK(fib.size() == brute.size());
    }
  }
}

TEST_CASE("Hilbert function counts standard monomials", "[monomial]") {
  const auto p3 = builtin::projective_space(3);
  CHECK(hilbert_function(p3, MonomialIdeal::zero(4), {2}) == 10);
  const MonomialIdeal ex(4, {Monomial({1, 0, 0, 2}), Monomial({0, 1, 0, 2}), Monomial({0, 0, 1, 2})});
  // 20 cubics, three of them x_i*x4^2
  CHECK(hilbert_function(p3, ex, {3}) == 17);
  CHECK(face_hilbert_function(p3, IndexSet::of({3}), {5}) == 1);
  CHECK(face_hilbert_function(p3, IndexSet::of({0, 1}), {5}) == 6);
  const auto p1 = builtin::projective_space(1);
  CHECK(hilbert_function(p1, MonomialIdeal(2, {Monomial({2, 1}), Monomial({1, 2})}), {4}) == 2);
}
