#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"

using namespace toricreg;

namespace {

MultiPoly poly(const char* s, std::size_t r) { return parse_polynomial(s, r); }

std::set<MonomialIdeal> ideal_set(const EnumerationResult& res) {
  std::set<MonomialIdeal> s;
  for (const auto& e : res.ideals) s.insert(e.ideal);
  return s;
}

}  // namespace

TEST_CASE("saturated ideals of the plane with polynomial 3t+1", "[enumerate]") {
  const auto p2 = builtin::projective_space(2);
  const auto res = enumerate_saturated_ideals(p2, poly("3t+1", 1));
  std::size_t subsets = 0;
  const auto oracle = oracle::plane_twisted_cubics(subsets);
  CHECK(subsets == 105);
  CHECK(res.ideals.size() == 30);
  CHECK(ideal_set(res) == oracle);
  CHECK(res.gotzmann_number == 4);
  CHECK(res.gotzmann_number_realized == 4);
  for (const auto& e : res.ideals) {
    CHECK(e.pairs.size() == 4);
    CHECK(is_b_saturated(e.ideal, p2));
    CHECK(quotient_hilbert_polynomial(p2, e.ideal) == poly("3t+1", 1));
  }
  CHECK(gotzmann_upper_bound(p2, poly("3t+1", 1)) >= 4);
}

TEST_CASE("points and lines in the plane", "[enumerate]") {
  const auto p2 = builtin::projective_space(2);
  // one point: the three coordinate points
  const auto pts = enumerate_saturated_ideals(p2, poly("1", 1));
  CHECK(pts.ideals.size() == 3);
  CHECK(pts.gotzmann_number == 1);
  // a line: the three coordinate lines
  const auto lines = enumerate_saturated_ideals(p2, poly("t+1", 1));
  CHECK(lines.ideals.size() == 3);
  CHECK(gotzmann_number(p2, poly("t+1", 1)) == 1);
  // two points
  CHECK(gotzmann_number(p2, poly("2", 1)) == 2);
}

TEST_CASE("Gotzmann numbers on P2 x P1", "[enumerate]") {
  const auto x = builtin::product(2, 1);
  CHECK(gotzmann_number(x, poly("3*t1 + 1", 2)) == 4);
  CHECK(gotzmann_number(x, poly("2*t1 + t2 + 1", 2)) == 3);
  CHECK(gotzmann_number(x, poly("t1 + 2*t2 + 1", 2)) == 3);
  CHECK(enumerate_saturated_ideals(x, poly("3*t2 + 1", 2)).ideals.empty());
  for (const char* s : {"3*t1 + 1", "2*t1 + t2 + 1"}) {
    const auto res = enumerate_saturated_ideals(x, poly(s, 2));
    for (const auto& e : res.ideals) {
      CHECK(quotient_hilbert_polynomial(x, e.ideal) == poly(s, 2));
      CHECK(is_b_saturated(e.ideal, x));
    }
    CHECK(gotzmann_upper_bound(x, poly(s, 2)) >= res.gotzmann_number);
  }
}

TEST_CASE("the ideal set does not depend on the term order", "[enumerate]") {
  const auto x = builtin::product(1, 1);
  for (const char* s : {"t1 + t2 + 1", "2", "t1 + 2"}) {
    GradedOrder rev;
    rev.priority = {1, 0};
    const auto a = enumerate_saturated_ideals(x, poly(s, 2), GradedOrder::glex(2));
    const auto b = enumerate_saturated_ideals(x, poly(s, 2), rev);
    CHECK(ideal_set(a) == ideal_set(b));
    CHECK_FALSE(a.ideals.empty());
  }
}

TEST_CASE("twisted gradings enumerate in transformed coordinates", "[enumerate]") {
  const auto f2 = builtin::hirzebruch(2);
  const auto twisted = build_variety(builtin::hirzebruch_fan(2), IntMatrix{{0, 1, 0, 1}, {-1, 2, -1, 0}});
  // a point of F2: P = 1 in any grading
  const auto a = enumerate_saturated_ideals(f2, poly("1", 2));
  const auto b = enumerate_saturated_ideals(twisted, poly("1", 2));
  CHECK(a.ideals.size() == 4);
  CHECK(ideal_set(a) == ideal_set(b));
}

TEST_CASE("nice filtrations of the plane fixtures", "[enumerate]") {
  const auto p2 = builtin::projective_space(2);
  const auto res = enumerate_saturated_ideals(p2, poly("3t+1", 1));
  const FaceOrder& ord = res.order;
  for (const auto& e : res.ideals) {
    const auto filt = stanley_decompose(e.ideal, nice_strategy(p2, ord)).filtration();
    REQUIRE(verify_stanley(e.ideal, filt, VerifyMode::Filtration));
    int max_shift = 0;
    for (std::size_t i = 0; i < filt.size(); ++i) {
      max_shift = std::max(max_shift, filt[i].shift.total_degree());
      const IndexSet hat_i = filt[i].face.complement(3);
      if (!p2.is_face(hat_i) || filt[i].shift.is_one()) continue;
      bool witnessed = false;
      for (std::size_t j = 0; j < i && !witnessed; ++j) {
        const IndexSet hat_j = filt[j].face.complement(3);
        if (!p2.is_face(hat_j) || ord.rank_of(hat_j) > ord.rank_of(hat_i)) continue;
        for (std::size_t l = 0; l < 3; ++l)
          witnessed = witnessed || (!filt[j].face.contains(l) && filt[j].shift.times_variable(l) == filt[i].shift);
      }
      CHECK(witnessed);
    }
    CHECK(max_shift <= 3);
  }
}

TEST_CASE("zero and impossible polynomials", "[enumerate]") {
  const auto p2 = builtin::projective_space(2);
  CHECK(enumerate_saturated_ideals(p2, MultiPoly(1)).ideals.empty());
  try {
    gotzmann_number(p2, poly("-t", 1));
    FAIL("negative polynomial accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRepresentation);
  }
  CHECK_THROWS_AS(gotzmann_number(p2, poly("1/2*t", 1)), Error);
}
