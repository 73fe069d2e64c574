#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "toricreg/hilbert.hpp"

using namespace toricreg;

namespace {

MultiPoly binom_shift(std::size_t r, std::size_t var, int shift, int k) {
  return binomial(MultiPoly::variable(r, var) + MultiPoly::constant(r, shift), k);
}

}  // namespace

TEST_CASE("Cox rings of projective spaces", "[hilbert]") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto x = builtin::projective_space(d);
    CHECK(ring_hilbert_polynomial(x) == binom_shift(1, 0, static_cast<int>(d), static_cast<int>(d)));
  }
  const auto p3 = builtin::projective_space(3);
  CHECK(to_string(face_hilbert_polynomial(p3, IndexSet::of({0, 1, 2}))) == "1/2*t^2 + 3/2*t + 1");
  CHECK(face_hilbert_polynomial(p3, IndexSet::of({3})) == MultiPoly::constant(1, 1));
}

TEST_CASE("Cox ring of F2", "[hilbert]") {
  const auto f2 = builtin::hirzebruch(2);
  CHECK(to_string(ring_hilbert_polynomial(f2)) == "t1*t2 + t2^2 + t1 + 2*t2 + 1");
  CHECK_FALSE(face_hilbert_polynomial_checked(f2, IndexSet::of({0, 1})).torsion);
  CHECK(face_hilbert_polynomial_checked(f2, IndexSet::of({0, 2})).torsion);
  CHECK(face_hilbert_polynomial_checked(f2, IndexSet::of({1, 3})).torsion);
}

TEST_CASE("interpolated polynomials match fiber counts deep in K", "[hilbert]") {
  Fan hexagon;
  hexagon.rays = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  for (std::size_t i = 0; i < 6; ++i) hexagon.max_cones.push_back(IndexSet::of({i, (i + 1) % 6}));
  const std::vector<ToricVariety> xs = {builtin::hirzebruch(2), builtin::product(2, 1), builtin::hirzebruch(1),
                                        build_variety(builtin::hirzebruch_fan(2)), build_variety(hexagon)};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> coord(0, 6);
  for (const auto& x : xs) {
    const auto u = positive_orthant_change(x);
    const IntVec base = linalg::scale(find_c(x), 4);
    for (IndexSet hat : x.faces()) {
      const IndexSet sigma = hat.complement(x.n());
      const auto p = face_hilbert_polynomial(x, sigma);
      for (int k = 0; k < 6; ++k) {
        IntVec lam(x.r());
        for (auto& v : lam) v = coord(rng);
        const IntVec t = linalg::add(base, u.to_old(lam));
        CHECK(p.evaluate(t) == Rational(face_hilbert_function(x, sigma, t)));
      }
    }
  }
}

TEST_CASE("quotient polynomial of <x1*x4^2, x2*x4^2, x3*x4^2>", "[hilbert]") {
  const auto p3 = builtin::projective_space(3);
  const MonomialIdeal i(4, {Monomial({1, 0, 0, 2}), Monomial({0, 1, 0, 2}), Monomial({0, 0, 1, 2})});
  const auto p = quotient_hilbert_polynomial(p3, i);
  CHECK(to_string(p) == "t^2 + 2*t + 2");
  for (Int t = 2; t <= 12; ++t) CHECK(p.evaluate(IntVec{t}) == Rational(hilbert_function(p3, i, {t})));
}

TEST_CASE("quotient polynomials do not depend on the strategy", "[hilbert]") {
  const auto f2 = builtin::hirzebruch(2);
  const MonomialIdeal i(4, {Monomial({1, 1, 0, 0}), Monomial({0, 2, 1, 0}), Monomial({0, 0, 1, 3})});
  const auto p = quotient_hilbert_polynomial(f2, i);
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const VariableChoice pick = [&](const MonomialIdeal& j) {
      std::vector<std::size_t> vs;
      for (std::size_t v = 0; v < j.nvars(); ++v)
        if (properly_divides(j, v)) vs.push_back(v);
      return vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
    };
    CHECK(quotient_hilbert_polynomial(f2, i, pick) == p);
  }
  const IntVec c = find_c(f2);
  for (Int a = 0; a < 4; ++a)
    for (Int b = 0; b < 4; ++b) {
      const IntVec t = linalg::add(linalg::scale(c, 6), IntVec{a, b});
      CHECK(p.evaluate(t) == Rational(hilbert_function(f2, b_saturate(i, f2), t)));
    }
}
