#pragma once

// Polynomials in r variables with exact rational coefficients, the graded
// monomial orders used to compare Hilbert polynomials, and the canonical
// text form `3*t1*t2 + 1/2*t2^2 - t1 + 1`.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "toricreg/error.hpp"
#include "toricreg/linalg.hpp"

namespace toricreg {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t nvars, std::size_t i) {
    MultiPoly p(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
  }
  /// Affine form c0 + sum_j coeffs[j] * t_j.
  static MultiPoly affine(const std::vector<Rational>& coeffs, const Rational& c0) {
    MultiPoly p = constant(coeffs.size(), c0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) p += variable(coeffs.size(), j) * coeffs[j];
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, toricreg::total_degree(e));
    return d;
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.nvars_) - a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) {
    if (s == 0) return MultiPoly(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& t) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= t[i];
      sum += term;
    }
    return sum;
  }
  Rational evaluate(const IntVec& t) const {
    std::vector<Rational> q(t.begin(), t.end());
    return evaluate(q);
  }

  /// Replaces t_j by images[j] (all images share a variable count).
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    const std::size_t out_vars = images.empty() ? nvars_ : images[0].nvars();
    MultiPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = constant(out_vars, c);
      for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k) term = term * images[j];
      out += term;
    }
    return out;
  }

  /// P(t - s).
  MultiPoly shifted(const IntVec& s) const {
    if (std::all_of(s.begin(), s.end(), [](Int x) { return x == 0; })) return *this;
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j < nvars_; ++j) images.push_back(variable(nvars_, j) - constant(nvars_, Rational(s[j])));
    return substitute(images);
  }

  /// P(M t) for an integer matrix M acting on the variables.
  MultiPoly linear_change(const IntMatrix& m) const {
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j < nvars_; ++j) {
      std::vector<Rational> row(m[j].begin(), m[j].end());
      images.push_back(affine(row, 0));
    }
    return substitute(images);
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Graded lexicographic order with a variable priority: priority[0] is the
/// largest variable.
struct GradedOrder {
  std::vector<std::size_t> priority;

  static GradedOrder glex(std::size_t nvars) {
    GradedOrder o;
    o.priority.resize(nvars);
    std::iota(o.priority.begin(), o.priority.end(), std::size_t{0});
    return o;
  }

  bool less(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t v : priority)
      if (a[v] != b[v]) return a[v] < b[v];
    return false;
  }
};

struct LeadingTerm {
  Exponent exponent;
  Rational coefficient;
};

inline LeadingTerm leading_term(const MultiPoly& p, const GradedOrder& ord) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

inline bool leading_coeff_positive(const MultiPoly& p, const GradedOrder& ord) {
  return leading_term(p, ord).coefficient > 0;
}

/// binom(x, k) = x (x-1) ... (x-k+1) / k! as a polynomial.
inline MultiPoly binomial(const MultiPoly& x, int k) {
  MultiPoly out = MultiPoly::constant(x.nvars(), 1);
  Rational fact = 1;
  for (int i = 0; i < k; ++i) {
    out = out * (x - MultiPoly::constant(x.nvars(), i));
    fact *= (i + 1);
  }
  return out * (Rational(1) / fact);
}

inline std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

inline std::string variable_name(std::size_t nvars, std::size_t i) {
  return nvars == 1 ? std::string("t") : "t" + std::to_string(i + 1);
}

/// Canonical rendering, terms in decreasing glex order.
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  const auto ord = GradedOrder::glex(p.nvars());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(p.nvars(), i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rational_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_string(mag) + "*" + mono;
    }
  }
  return out;
}

/// Parses `3*t1*t2 + 1/2*t2^2 - t1 + 1`. With nvars == 1 the variable may be
/// written `t` or `t1`.
inline MultiPoly parse_polynomial(const std::string& text, std::size_t nvars) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> MultiPoly {
    throw Error(ErrorKind::ParseError, "polynomial '" + text + "': " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> long long {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number at position " + std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  };

  MultiPoly result(nvars);
  skip();
  if (pos == text.size()) fail("empty input");
  bool first_term = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first_term) {
      fail("expected '+' or '-' at position " + std::to_string(pos));
    }
    first_term = false;
    Rational coeff = sign;
    Exponent e(nvars, 0);
    bool any_factor = false;
    while (true) {
      skip();
      if (pos >= text.size()) break;
      const char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Rational num = read_int();
        skip();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          const long long den = read_int();
          if (den == 0) fail("zero denominator");
          num /= den;
        }
        coeff *= num;
      } else if (ch == 't') {
        ++pos;
        std::size_t var = 0;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          const long long idx = read_int();
          if (idx < 1 || static_cast<std::size_t>(idx) > nvars) fail("variable index out of range");
          var = static_cast<std::size_t>(idx - 1);
        } else if (nvars != 1) {
          fail("bare 't' is only valid for a single variable");
        }
        int power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = static_cast<int>(read_int());
        }
        e[var] += power;
      } else {
        break;
      }
      any_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      // implicit product such as "3t"
      if (pos < text.size() && (text[pos] == 't' || std::isdigit(static_cast<unsigned char>(text[pos])))) continue;
      break;
    }
    if (!any_factor) fail("empty term at position " + std::to_string(pos));
    result.add_term(e, coeff);
  }
  return result;
}

}  // namespace toricreg
