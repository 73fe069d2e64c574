#pragma once

// Small exact integer/rational linear algebra used for lattice bookkeeping
// (Gale duals, unimodular changes of coordinates, cone descriptions).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toricreg/error.hpp"

namespace toricreg {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace linalg {

inline Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IntVec add(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline IntVec sub(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline IntVec scale(IntVec a, Int s) {
  for (Int& x : a) x *= s;
  return a;
}

inline IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntVec apply(const IntMatrix& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline IntVec column(const IntMatrix& m, std::size_t j) {
  IntVec c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

/// Matrix whose columns are the given vectors.
inline IntMatrix from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return {};
  IntMatrix m(cols[0].size(), IntVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
  return m;
}

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (Int x : m[i]) r[i].emplace_back(x);
  return r;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    const Rational piv = m[row][col];
    for (auto& x : m[row]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  return rref(r).size();
}

inline Rational determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = to_rational(m);
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

inline Int to_int(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1)
    throw Error(ErrorKind::InvalidGrading, "expected an integer value");
  return static_cast<Int>(boost::multiprecision::numerator(q));
}

/// Inverse of a square matrix with determinant +-1.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw Error(ErrorKind::InvalidGrading, "matrix is singular");
  IntMatrix inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = to_int(aug[i][n + j]);
  return inv;
}

/// Integer row echelon form by unimodular row operations. `track`, when
/// non-null, receives the same operations (so track = U * track_in).
inline void integer_row_echelon(IntMatrix& m, IntMatrix* track) {
  if (m.empty()) return;
  const std::size_t rows = m.size(), cols = m[0].size();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    if (track) std::swap((*track)[a], (*track)[b]);
  };
  auto axpy = [&](std::size_t dst, std::size_t src, Int f) {  // row_dst -= f*row_src
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] -= f * m[src][j];
    if (track)
      for (std::size_t j = 0; j < (*track)[dst].size(); ++j) (*track)[dst][j] -= f * (*track)[src][j];
  };
  auto negate = [&](std::size_t r) {
    for (auto& x : m[r]) x = -x;
    if (track)
      for (auto& x : (*track)[r]) x = -x;
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = row; i < rows; ++i)
        if (m[i][col] != 0 && (best == rows || std::llabs(m[i][col]) < std::llabs(m[best][col]))) best = i;
      if (best == rows) break;
      swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        axpy(i, row, m[i][col] / m[row][col]);
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0) negate(row);
    for (std::size_t i = 0; i < row; ++i) {
      Int q = m[i][col] / m[row][col];
      if (m[i][col] - q * m[row][col] < 0) --q;
      if (q != 0) axpy(i, row, q);
    }
    ++row;
  }
}

/// Row Hermite normal form with zero rows removed.
inline IntMatrix hermite_rows(IntMatrix m) {
  integer_row_echelon(m, nullptr);
  IntMatrix out;
  for (auto& r : m)
    if (std::any_of(r.begin(), r.end(), [](Int x) { return x != 0; })) out.push_back(r);
  return out;
}

/// Rows forming a Z-basis of {y in Z^n : m * y = 0}, in Hermite normal form.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  IntMatrix work = transpose(m);  // n x d
  IntMatrix track = identity(n);
  integer_row_echelon(work, &track);
  IntMatrix kernel;
  for (std::size_t i = 0; i < n; ++i)
    if (std::all_of(work[i].begin(), work[i].end(), [](Int x) { return x == 0; })) kernel.push_back(track[i]);
  return hermite_rows(kernel);
}

/// Unimodular matrix whose first column is the primitive vector v.
inline IntMatrix complete_to_basis(const IntVec& v) {
  const std::size_t n = v.size();
  IntMatrix col(n, IntVec(1));
  for (std::size_t i = 0; i < n; ++i) col[i][0] = v[i];
  IntMatrix ops = identity(n);
  integer_row_echelon(col, &ops);  // ops * v = e1 (v primitive)
  if (col[0][0] != 1) throw Error(ErrorKind::InvalidGrading, "vector is not primitive");
  return inverse_unimodular(ops);
}

/// Rational solution of m x = b for square nonsingular m.
inline std::vector<Rational> solve(const IntMatrix& m, const IntVec& b) {
  const std::size_t n = m.size();
  RatMatrix aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n] = b[i];
  }
  rref(aug);
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace linalg
}  // namespace toricreg
