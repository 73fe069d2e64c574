#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "toricreg/hilbscheme.hpp"

using namespace toricreg;

namespace {

MultiPoly poly(const char* s, std::size_t r = 1) { return parse_polynomial(s, r); }

// All ideals generated by subsets of the degree-t monomials (t in D) whose
// quotient has H = P on D.
std::set<MonomialIdeal> brute_force(const ToricVariety& x, const std::vector<IntVec>& d, const MultiPoly& p) {
  std::vector<Monomial> pool;
  for (const auto& t : d)
    for (const auto& m : fiber_monomials(x, t)) pool.push_back(m);
  REQUIRE(pool.size() < 20);
  std::set<MonomialIdeal> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if ((mask >> k) & 1U) gens.push_back(pool[k]);
    const MonomialIdeal i(x.n(), gens);
    bool ok = true;
    for (const auto& t : d) ok = ok && Rational(hilbert_function(x, i, t)) == p.evaluate(t);
    if (ok) out.insert(i);
  }
  return out;
}

}  // namespace

TEST_CASE("ideals generated in prescribed degrees", "[hilbscheme]") {
  const auto p2 = builtin::projective_space(2);
  for (const auto& d : std::vector<std::vector<IntVec>>{{{2}}, {{1}, {2}}, {{1}, {3}}}) {
    const auto got = ideals_generated_in_degrees(p2, d, poly("2"));
    CHECK(std::set<MonomialIdeal>(got.begin(), got.end()) == brute_force(p2, d, poly("2")));
    CHECK(std::set<MonomialIdeal>(got.begin(), got.end()).size() == got.size());
  }
  const auto p1 = builtin::projective_space(1);
  for (const auto& d : std::vector<std::vector<IntVec>>{{{0}, {1}, {2}}, {{2}, {5}}}) {
    const auto got = ideals_generated_in_degrees(p1, d, poly("1"));
    CHECK(std::set<MonomialIdeal>(got.begin(), got.end()) == brute_force(p1, d, poly("1")));
  }
}

TEST_CASE("infeasible values and budgets are reported", "[hilbscheme]") {
  const auto p1 = builtin::projective_space(1);
  try {
    ideals_generated_in_degrees(p1, {{1}}, poly("10"));
    FAIL("value above the fiber size accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfeasibleHilbertValue);
  }
  try {
    ideals_generated_in_degrees(builtin::projective_space(2), {{3}}, poly("3"), 3);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("degree sets on P1 and P2 are supportive", "[hilbscheme]") {
  for (std::size_t d : {1, 2})
    for (const char* s : {"1", "2", "t+1"}) {
      const auto x = builtin::projective_space(d);
      const auto res = degree_set(x, poly(s));
      CHECK(res.fixpoint);
      CHECK(res.points.front() == res.k);
      const auto rep = verify_supportive(x, poly(s), res, 6);
      INFO("P" << d << " with " << s << ": " << rep.failure);
      CHECK(rep.ok);
      CHECK(rep.candidates > 0);
    }
}

TEST_CASE("degree sets on P1 x P1", "[hilbscheme]") {
  const auto x = builtin::product(1, 1);
  for (const char* s : {"1", "t1 + 1"}) {
    const auto res = degree_set(x, poly(s, 2));
    CHECK(res.fixpoint);
    CHECK(verify_supportive(x, poly(s, 2), res, 4).ok);
  }
}

TEST_CASE("degree sets are reproducible from the seed", "[hilbscheme]") {
  const auto p2 = builtin::projective_space(2);
  DegreeSetOptions opt;
  opt.seed = 17;
  const auto a = degree_set(p2, poly("2"), opt);
  const auto b = degree_set(p2, poly("2"), opt);
  CHECK(a.points == b.points);
  CHECK(a.seed == 17);
  CHECK(a.gotzmann == 2);
  CHECK(a.k == IntVec{1});
}
