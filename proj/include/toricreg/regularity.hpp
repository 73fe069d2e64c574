#pragma once

// K-upsets (finite unions of translates g + K and intersections of those)
// and the regularity regions obtained from Stanley filtrations and from
// Gotzmann numbers.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricreg/enumerate.hpp"
#include "toricreg/error.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg {

/// An intersection of clauses, each clause a union of translates g + K. In
/// coordinate mode intersections are resolved eagerly into one clause.
class KUpset {
 public:
  KUpset() = default;
  KUpset(std::shared_ptr<const NefCone> cone, std::vector<IntVec> gens) : cone_(std::move(cone)) {
    clauses_.push_back(minimal(std::move(gens)));
  }
  static KUpset anchored(std::shared_ptr<const NefCone> cone, IntVec g) { return KUpset(std::move(cone), {std::move(g)}); }

  const NefCone& cone() const { return *cone_; }
  std::shared_ptr<const NefCone> cone_ptr() const { return cone_; }
  bool coordinate_mode() const { return cone_->coordinate_mode(); }

  bool contains(const IntVec& p) const {
    for (const auto& clause : clauses_) {
      bool hit = false;
      for (const auto& g : clause) hit = hit || cone_->contains(linalg::sub(p, g));
      if (!hit) return false;
    }
    return true;
  }

  bool has_generators() const { return clauses_.size() == 1; }
  const std::vector<IntVec>& generators() const {
    if (!has_generators()) throw Error(ErrorKind::Unsupported, "generators of an intersection over a non-simplicial nef cone");
    return clauses_[0];
  }

  KUpset translated(const IntVec& v) const {
    KUpset out = *this;
    for (auto& clause : out.clauses_)
      for (auto& g : clause) g = linalg::add(g, v);
    return out;
  }

  friend KUpset upset_intersect(const KUpset& a, const KUpset& b) {
    KUpset out = a;
    if (a.coordinate_mode() && a.has_generators() && b.has_generators()) {
      const NefCone& k = *a.cone_;
      std::vector<IntVec> gens;
      for (const auto& g : a.clauses_[0])
        for (const auto& h : b.clauses_[0]) {
          IntVec cg = k.coordinates(g);
          const IntVec ch = k.coordinates(h);
          for (std::size_t j = 0; j < cg.size(); ++j) cg[j] = std::max(cg[j], ch[j]);
          gens.push_back(k.from_coordinates(cg));
        }
      out.clauses_ = {out.minimal(std::move(gens))};
      return out;
    }
    out.clauses_.insert(out.clauses_.end(), b.clauses_.begin(), b.clauses_.end());
    return out;
  }

  /// `{(2,1),(1,2)} + K`.
  std::string to_string() const {
    std::string s;
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (c) s += " & ";
      s += "{";
      for (std::size_t i = 0; i < clauses_[c].size(); ++i) {
        if (i) s += ",";
        s += "(";
        for (std::size_t j = 0; j < clauses_[c][i].size(); ++j) s += (j ? "," : "") + std::to_string(clauses_[c][i][j]);
        s += ")";
      }
      s += "} + K";
    }
    return s;
  }

 private:
  std::vector<IntVec> minimal(std::vector<IntVec> gens) const {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        redundant = j != i && cone_->contains(linalg::sub(gens[i], gens[j]));
      if (!redundant) out.push_back(gens[i]);
    }
    return out;
  }

  std::shared_ptr<const NefCone> cone_;
  std::vector<std::vector<IntVec>> clauses_;
};

/// Assumed subsets of reg(S_sigma), keyed by sigma.
struct RegularityAssumption {
  std::map<std::uint64_t, KUpset> baselines;
  std::string label;

  /// K itself for every sigma with sigma-hat a face.
  static RegularityAssumption default_for(const ToricVariety& x) {
    RegularityAssumption a;
    a.label = "default-K";
    for (IndexSet hat : x.faces())
      a.baselines.emplace(hat.complement(x.n()).bits, KUpset::anchored(x.nef_cone_ptr(), IntVec(x.r(), 0)));
    return a;
  }

  std::optional<KUpset> baseline(IndexSet sigma) const {
    auto it = baselines.find(sigma.bits);
    if (it == baselines.end()) return std::nullopt;
    return it->second;
  }
};

inline KUpset reg_bound_from_filtration(const ToricVariety& x, const MonomialIdeal& i, const std::vector<StanleyPair>& filt,
                                        const RegularityAssumption& assume) {
  if (auto res = verify_stanley(i, filt, VerifyMode::Filtration); !res)
    throw Error(ErrorKind::FiltrationInvalid, res.reason);
  const bool saturated = is_b_saturated(i, x);
  std::optional<KUpset> acc;
  for (const auto& p : filt) {
    if (saturated && !x.is_face(p.face.complement(x.n()))) continue;
    auto base = assume.baseline(p.face);
    if (!base) throw Error(ErrorKind::MissingBaseline, "no baseline for the face ring of " + p.face.to_string());
    KUpset term = base->translated(x.degree(p.shift.exponents));
    acc = acc ? upset_intersect(*acc, term) : term;
  }
  if (!acc) throw Error(ErrorKind::FiltrationInvalid, "filtration has no pair supported on a face");
  return *acc;
}

inline KUpset reg_bound_from_polynomial(const ToricVariety& x, const MultiPoly& p, const RegularityAssumption& assume,
                                        std::size_t* gotzmann_out = nullptr) {
  std::size_t m = 0;
  try {
    m = gotzmann_number(x, p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoRepresentation || e.kind() == ErrorKind::ZeroPolynomial)
      throw Error(ErrorKind::NoSaturatedIdeal, "no saturated monomial ideal has Hilbert polynomial " + to_string(p));
    throw;
  }
  if (gotzmann_out) *gotzmann_out = m;
  const IntVec shift = linalg::scale(find_c(x), static_cast<Int>(m) - 1);
  std::optional<KUpset> acc;
  for (IndexSet hat : x.faces()) {
    auto base = assume.baseline(hat.complement(x.n()));
    if (!base) throw Error(ErrorKind::MissingBaseline, "no baseline for the face ring of " + hat.complement(x.n()).to_string());
    acc = acc ? upset_intersect(*acc, *base) : *base;
  }
  return acc->translated(shift);
}

}  // namespace toricreg
