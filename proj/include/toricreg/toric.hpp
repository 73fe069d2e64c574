#pragma once

// Smooth projective toric varieties given by a fan: the Gale-dual grading of
// the Cox ring, the simplicial complex of cones, the irrelevant ideal and the
// nef semigroup K.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/index_set.hpp"
#include "toricreg/linalg.hpp"
#include "toricreg/polynomial.hpp"

namespace toricreg {

struct Fan {
  std::vector<IntVec> rays;          // b_1..b_n in Z^d
  std::vector<IndexSet> max_cones;   // 0-based ray indices

  std::size_t n() const { return rays.size(); }
  std::size_t d() const { return rays.empty() ? 0 : rays[0].size(); }
};

/// Unimodular change of coordinates on Z^r; old = matrix * new.
struct UnimodularMap {
  IntMatrix matrix;
  IntMatrix inverse;

  IntVec to_old(const IntVec& v) const { return linalg::apply(matrix, v); }
  IntVec to_new(const IntVec& v) const { return linalg::apply(inverse, v); }
  bool is_identity() const { return matrix == linalg::identity(matrix.size()); }
};

/// K = { v : row . v >= 0 for every row }, together with its extreme rays.
class NefCone {
 public:
  NefCone() = default;
  NefCone(std::vector<IntVec> rows, std::size_t r) : r_(r), rows_(std::move(rows)) {
    compute_rays();
    if (rays_.empty() || linalg::rank(linalg::from_columns(rays_)) < r_)
      throw Error(ErrorKind::NotFullDimensional, "nef cone is not full-dimensional");
    if (linalg::rank(rows_) < r_) throw Error(ErrorKind::NotPointed, "nef cone contains a line");
    interior_ = IntVec(r_, 0);
    for (const auto& ray : rays_) interior_ = linalg::add(interior_, ray);
    const Int g = linalg::gcd_of(interior_);
    for (auto& x : interior_) x /= g;
    if (rays_.size() == r_ && abs(linalg::determinant(linalg::from_columns(rays_))) == 1) {
      basis_ = linalg::from_columns(rays_);
      basis_inverse_ = linalg::inverse_unimodular(basis_);
    }
  }

  std::size_t r() const { return r_; }
  const std::vector<IntVec>& rows() const { return rows_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  /// Primitive vector in the interior: the normalized sum of the extreme rays.
  const IntVec& interior() const { return interior_; }

  bool contains(const IntVec& v) const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const IntVec& row) { return linalg::dot(row, v) >= 0; });
  }

  /// K is generated by a lattice basis of r rays.
  bool coordinate_mode() const { return !basis_.empty(); }
  /// Coordinates with respect to the ray basis (coordinate mode only).
  IntVec coordinates(const IntVec& v) const { return linalg::apply(basis_inverse_, v); }
  IntVec from_coordinates(const IntVec& c) const { return linalg::apply(basis_, c); }

  /// Linear functional that is positive on K \ {0}.
  Int weight(const IntVec& v) const {
    if (coordinate_mode()) {
      Int s = 0;
      for (Int x : coordinates(v)) s += x;
      return s;
    }
    Int s = 0;
    for (const auto& row : rows_) s += linalg::dot(row, v);
    return s;
  }

 private:
  void compute_rays() {
    if (r_ == 1) {
      bool pos = true, neg = true;
      for (const auto& row : rows_) {
        if (row[0] < 0) pos = false;
        if (row[0] > 0) neg = false;
      }
      if (pos) rays_.push_back({1});
      if (neg) rays_.push_back({-1});
      return;
    }
    std::set<IntVec> found;
    std::vector<std::size_t> pick(r_ - 1);
    const std::size_t m = rows_.size();
    if (m < r_ - 1) return;
    for (std::size_t i = 0; i < r_ - 1; ++i) pick[i] = i;
    while (true) {
      IntMatrix sub;
      for (auto i : pick) sub.push_back(rows_[i]);
      const IntMatrix ker = linalg::integer_kernel(sub);
      if (ker.size() == 1) {
        for (Int sign : {1, -1}) {
          IntVec cand = linalg::scale(ker[0], sign);
          const Int g = linalg::gcd_of(cand);
          for (auto& x : cand) x /= g;
          if (contains(cand)) found.insert(cand);
        }
      }
      std::size_t k = r_ - 1;
      while (k > 0 && pick[k - 1] == m - (r_ - 1) + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < r_ - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
    rays_.assign(found.begin(), found.end());
  }

  std::size_t r_ = 0;
  std::vector<IntVec> rows_;
  std::vector<IntVec> rays_;
  IntVec interior_;
  IntMatrix basis_, basis_inverse_;
};

class ToricVariety;
ToricVariety build_variety(const Fan& fan);
ToricVariety build_variety(const Fan& fan, const IntMatrix& grading);

namespace detail {
struct FacePolyCache {
  std::mutex mutex;
  std::map<std::uint64_t, MultiPoly> polys;
  std::optional<UnimodularMap> orthant_change;
};
}  // namespace detail

class ToricVariety {
 public:
  const Fan& fan() const { return fan_; }
  std::size_t n() const { return fan_.n(); }
  std::size_t d() const { return fan_.d(); }
  std::size_t r() const { return n() - d(); }
  const IntMatrix& grading() const { return grading_; }
  IntVec degree_of(std::size_t i) const { return linalg::column(grading_, i); }
  IntVec degree(const std::vector<int>& exponents) const {
    IntVec t(r(), 0);
    for (std::size_t i = 0; i < exponents.size(); ++i)
      for (std::size_t k = 0; k < r(); ++k) t[k] += grading_[k][i] * exponents[i];
    return t;
  }

  /// All faces of the fan (downward closure of the maximal cones), sorted.
  const std::vector<IndexSet>& faces() const { return faces_; }
  bool is_face(IndexSet s) const { return face_bits_.count(s.bits) != 0; }

  /// Exponent vectors of prod_{i not in sigma} x_i for sigma in faces(); the
  /// entries coming from maximal cones are the minimal generators of B.
  struct IrrelevantGen {
    IndexSet face;
    std::vector<int> exponents;
    bool minimal;
  };
  const std::vector<IrrelevantGen>& irrelevant_gens() const { return irrelevant_; }

  const NefCone& nef_cone() const { return *cone_; }
  std::shared_ptr<const NefCone> nef_cone_ptr() const { return cone_; }
  /// w with w . a_i > 0 for every i (bounds the degree fibers).
  const IntVec& positive_functional() const { return functional_; }

  detail::FacePolyCache& cache() const { return *cache_; }

  /// Same fan with grading inverse(U) * A, i.e. degrees in the new coordinates.
  ToricVariety in_coordinates(const UnimodularMap& u) const {
    return build_variety(fan_, linalg::multiply(u.inverse, grading_));
  }

 private:
  friend ToricVariety build_variety(const Fan& fan, const IntMatrix& grading);

  Fan fan_;
  IntMatrix grading_;
  std::vector<IndexSet> faces_;
  std::unordered_set<std::uint64_t> face_bits_;
  std::vector<IrrelevantGen> irrelevant_;
  std::shared_ptr<const NefCone> cone_;
  IntVec functional_;
  std::shared_ptr<detail::FacePolyCache> cache_ = std::make_shared<detail::FacePolyCache>();
};

namespace detail {

inline IntMatrix columns_outside(const IntMatrix& a, IndexSet sigma) {
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i < a[0].size(); ++i)
    if (!sigma.contains(i)) cols.push_back(linalg::column(a, i));
  return linalg::from_columns(cols);
}

inline void validate_fan(const Fan& fan) {
  const std::size_t n = fan.n(), d = fan.d();
  if (n == 0 || d == 0) throw Error(ErrorKind::RaysNotSpanning, "empty fan");
  if (n > 64) throw Error(ErrorKind::Unsupported, "at most 64 rays are supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (fan.rays[i].size() != d) throw Error(ErrorKind::RaysNotSpanning, "rays have inconsistent dimensions");
    if (std::abs(linalg::gcd_of(fan.rays[i])) != 1)
      throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i + 1) + " is not primitive");
  }
  if (linalg::rank(fan.rays) != d) throw Error(ErrorKind::RaysNotSpanning, "rays do not span the ambient space");
  if (fan.max_cones.empty()) throw Error(ErrorKind::NotComplete, "no maximal cones");

  std::set<std::uint64_t> seen;
  for (IndexSet cone : fan.max_cones) {
    if (cone.size() != d)
      throw Error(ErrorKind::NotComplete, "maximal cone " + cone.to_string() + " is not full-dimensional");
    if (!cone.subset_of(IndexSet::full(n)))
      throw Error(ErrorKind::ParseError, "maximal cone " + cone.to_string() + " uses an unknown ray");
    if (!seen.insert(cone.bits).second) throw Error(ErrorKind::NotComplete, "duplicate maximal cone " + cone.to_string());
    IntMatrix m;
    for (auto i : cone.indices()) m.push_back(fan.rays[i]);
    const Rational det = linalg::determinant(m);
    if (det != 1 && det != -1)
      throw Error(ErrorKind::NotSmooth, "cone " + cone.to_string() + " has determinant " + rational_string(det));
  }

  // Facet pairing: each wall lies in exactly two maximal cones whose
  // remaining rays sit on opposite sides of it.
  for (IndexSet cone : fan.max_cones) {
    for (auto i : cone.indices()) {
      IndexSet wall = cone;
      wall.erase(i);
      std::vector<std::size_t> others;
      for (IndexSet other : fan.max_cones)
        if (other != cone && wall.subset_of(other)) others.push_back((other & wall.complement(n)).indices()[0]);
      if (others.size() != 1)
        throw Error(ErrorKind::NotComplete, "wall " + wall.to_string() + " lies in " + std::to_string(others.size() + 1) + " maximal cones");
      IntVec normal;
      if (d == 1) {
        normal = {1};
      } else {
        IntMatrix m;
        for (auto k : wall.indices()) m.push_back(fan.rays[k]);
        normal = linalg::integer_kernel(m).at(0);
      }
      const Int si = linalg::dot(normal, fan.rays[i]);
      const Int sj = linalg::dot(normal, fan.rays[others[0]]);
      if (si == 0 || sj == 0 || (si > 0) == (sj > 0))
        throw Error(ErrorKind::NotComplete, "cones meeting along " + wall.to_string() + " lie on the same side");
    }
  }
}

inline IntVec find_positive_functional(const IntMatrix& a) {
  const std::size_t r = a.size(), n = a[0].size();
  for (Int radius = 1; radius <= 64; ++radius) {
    IntVec w(r, -radius);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = linalg::dot(w, linalg::column(a, i)) > 0;
      if (ok) return w;
      std::size_t k = 0;
      while (k < r && w[k] == radius) w[k++] = -radius;
      if (k == r) break;
      ++w[k];
    }
  }
  throw Error(ErrorKind::NotPointed, "degrees of the variables do not lie in a pointed cone");
}

}  // namespace detail

inline ToricVariety build_variety(const Fan& fan, const IntMatrix& grading) {
  detail::validate_fan(fan);
  const std::size_t n = fan.n(), d = fan.d(), r = n - d;
  if (r == 0) throw Error(ErrorKind::NotComplete, "a complete fan needs more rays than dimensions");
  if (grading.size() != r || std::any_of(grading.begin(), grading.end(), [&](const IntVec& row) { return row.size() != n; }))
    throw Error(ErrorKind::InvalidGrading, "grading must be " + std::to_string(r) + " x " + std::to_string(n));
  const IntMatrix relation = linalg::multiply(grading, fan.rays);
  for (const auto& row : relation)
    for (Int x : row)
      if (x != 0) throw Error(ErrorKind::InvalidGrading, "grading does not annihilate the rays");

  ToricVariety x;
  x.fan_ = fan;
  x.grading_ = grading;

  std::vector<IntVec> rows;
  for (IndexSet cone : fan.max_cones) {
    const IntMatrix sub = detail::columns_outside(grading, cone);
    const Rational det = linalg::determinant(sub);
    if (det != 1 && det != -1)
      throw Error(ErrorKind::InvalidGrading, "degrees outside " + cone.to_string() + " are not a lattice basis");
    for (auto& row : linalg::inverse_unimodular(sub)) rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  x.cone_ = std::make_shared<const NefCone>(std::move(rows), r);

  std::set<IndexSet> faces;
  for (IndexSet cone : fan.max_cones)
    for (std::uint64_t sub = cone.bits;; sub = (sub - 1) & cone.bits) {
      faces.insert(IndexSet{sub});
      if (sub == 0) break;
    }
  x.faces_.assign(faces.begin(), faces.end());
  for (IndexSet f : x.faces_) {
    x.face_bits_.insert(f.bits);
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = f.contains(i) ? 0 : 1;
    const bool minimal = std::find(fan.max_cones.begin(), fan.max_cones.end(), f) != fan.max_cones.end();
    x.irrelevant_.push_back({f, e, minimal});
  }
  x.functional_ = detail::find_positive_functional(grading);
  return x;
}

/// Gale dual in row Hermite normal form.
inline ToricVariety build_variety(const Fan& fan) {
  detail::validate_fan(fan);
  const IntMatrix grading = linalg::integer_kernel(linalg::transpose(fan.rays));
  return build_variety(fan, grading);
}

inline bool nef_member(const ToricVariety& x, const IntVec& v) { return x.nef_cone().contains(v); }

inline bool is_face(const ToricVariety& x, IndexSet sigma_hat) { return x.is_face(sigma_hat); }

/// Least-weight lattice point c with c - v in K for every v; ties broken
/// lexicographically.
inline IntVec find_dominating(const NefCone& k, const std::vector<IntVec>& vs, std::size_t search_cap = 2000000) {
  const std::size_t r = k.r();
  if (vs.empty()) return IntVec(r, 0);
  auto dominates = [&](const IntVec& c) {
    return std::all_of(vs.begin(), vs.end(), [&](const IntVec& v) { return k.contains(linalg::sub(c, v)); });
  };
  if (k.coordinate_mode()) {
    IntVec coords = k.coordinates(vs[0]);
    for (const auto& v : vs) {
      const IntVec cv = k.coordinates(v);
      for (std::size_t j = 0; j < r; ++j) coords[j] = std::max(coords[j], cv[j]);
    }
    return k.from_coordinates(coords);
  }
  IntVec seed = vs[0];
  for (std::size_t steps = 0; !dominates(seed); ++steps) {
    if (steps > 100000) throw Error(ErrorKind::SearchExhausted, "no dominating point along the interior direction");
    seed = linalg::add(seed, k.interior());
  }
  // c = vs[0] + y with y in K and weight(y) <= budget; bound each coordinate
  // of y through the extreme rays.
  const Int budget = k.weight(seed) - k.weight(vs[0]);
  IntVec lo(r, 0), hi(r, 0);
  for (const auto& ray : k.rays()) {
    const Int w = k.weight(ray);
    const Int mult = (budget + w - 1) / w;
    for (std::size_t j = 0; j < r; ++j) {
      if (ray[j] > 0) hi[j] += ray[j] * mult;
      if (ray[j] < 0) lo[j] += ray[j] * mult;
    }
  }
  std::size_t count = 1;
  for (std::size_t j = 0; j < r; ++j) {
    count *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    if (count > search_cap) throw Error(ErrorKind::SearchExhausted, "dominating-point search box too large");
  }
  IntVec best = seed, y = lo;
  Int best_w = k.weight(seed);
  while (true) {
    if (k.contains(y)) {
      const IntVec c = linalg::add(vs[0], y);
      const Int w = k.weight(c);
      if ((w < best_w || (w == best_w && c < best)) && dominates(c)) {
        best = c;
        best_w = w;
      }
    }
    std::size_t j = 0;
    while (j < r && y[j] == hi[j]) y[j] = lo[j], ++j;
    if (j == r) break;
    ++y[j];
  }
  return best;
}

/// A point c with c - a_i in K for every i.
inline IntVec find_c(const ToricVariety& x) {
  std::vector<IntVec> degs;
  for (std::size_t i = 0; i < x.n(); ++i) degs.push_back(x.degree_of(i));
  return find_dominating(x.nef_cone(), degs);
}

/// U with U e_j in K for all j.
inline UnimodularMap positive_orthant_change(const ToricVariety& x) {
  auto& cache = x.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (cache.orthant_change) return *cache.orthant_change;
  }
  const NefCone& k = x.nef_cone();
  const std::size_t r = x.r();
  UnimodularMap u;
  bool orthant_inside = true;
  for (std::size_t j = 0; j < r; ++j) {
    IntVec e(r, 0);
    e[j] = 1;
    orthant_inside = orthant_inside && k.contains(e);
  }
  if (orthant_inside) {
    u.matrix = linalg::identity(r);
  } else {
    const IntVec& v1 = k.interior();
    IntMatrix basis = linalg::complete_to_basis(v1);
    for (std::size_t j = 1; j < r; ++j) {
      IntVec col = linalg::column(basis, j);
      for (std::size_t steps = 0; !k.contains(col); ++steps) {
        if (steps > 100000) throw Error(ErrorKind::SearchExhausted, "coordinate change search failed");
        col = linalg::add(col, v1);
      }
      for (std::size_t i = 0; i < r; ++i) basis[i][j] = col[i];
    }
    u.matrix = basis;
  }
  u.inverse = linalg::inverse_unimodular(u.matrix);
  std::lock_guard lock(cache.mutex);
  cache.orthant_change = u;
  return u;
}

namespace builtin {

/// Projective space P^d.
inline Fan projective_fan(std::size_t d) {
  Fan f;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  f.rays.push_back(IntVec(d, -1));
  for (std::size_t skip = 0; skip <= d; ++skip) {
    IndexSet cone = IndexSet::full(d + 1);
    cone.erase(skip);
    f.max_cones.push_back(cone);
  }
  return f;
}

/// P^a x P^b; rays of the first factor come first.
inline Fan product_fan(std::size_t a, std::size_t b) {
  const Fan fa = projective_fan(a), fb = projective_fan(b);
  Fan f;
  for (const auto& ray : fa.rays) {
    IntVec v(ray);
    v.resize(a + b, 0);
    f.rays.push_back(v);
  }
  for (const auto& ray : fb.rays) {
    IntVec v(a, 0);
    v.insert(v.end(), ray.begin(), ray.end());
    f.rays.push_back(v);
  }
  for (IndexSet ca : fa.max_cones)
    for (IndexSet cb : fb.max_cones) f.max_cones.push_back(IndexSet{ca.bits | (cb.bits << (a + 1))});
  return f;
}

/// Hirzebruch surface F_l with rays (1,0),(0,1),(-1,l),(0,-1).
inline Fan hirzebruch_fan(Int l) {
  Fan f;
  f.rays = {{1, 0}, {0, 1}, {-1, l}, {0, -1}};
  f.max_cones = {IndexSet::of({0, 1}), IndexSet::of({1, 2}), IndexSet::of({2, 3}), IndexSet::of({0, 3})};
  return f;
}

inline ToricVariety projective_space(std::size_t d) { return build_variety(projective_fan(d)); }

/// Grading rows (1,...,1,0,...,0) and (0,...,0,1,...,1).
inline ToricVariety product(std::size_t a, std::size_t b) {
  IntMatrix grading(2, IntVec(a + b + 2, 0));
  for (std::size_t i = 0; i <= a; ++i) grading[0][i] = 1;
  for (std::size_t i = a + 1; i < a + b + 2; ++i) grading[1][i] = 1;
  return build_variety(product_fan(a, b), grading);
}

/// Grading [[1,-l,1,0],[0,1,0,1]], for which K is the positive quadrant.
inline ToricVariety hirzebruch(Int l) {
  return build_variety(hirzebruch_fan(l), IntMatrix{{1, -l, 1, 0}, {0, 1, 0, 1}});
}

}  // namespace builtin
}  // namespace toricreg
