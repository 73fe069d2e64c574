#pragma once

// Text and JSON formats: varieties (files or built-in names), ideals,
// Stanley pairs, polynomials and upsets.

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricreg/error.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/polynomial.hpp"
#include "toricreg/regularity.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg::io {

using nlohmann::json;

inline std::vector<std::size_t> one_based(IndexSet s) {
  auto idx = s.indices();
  for (auto& i : idx) ++i;
  return idx;
}

inline IndexSet from_one_based(const std::vector<long long>& idx, std::size_t n) {
  IndexSet s;
  for (auto i : idx) {
    if (i < 1 || static_cast<std::size_t>(i) > n) throw Error(ErrorKind::ParseError, "index " + std::to_string(i) + " out of range");
    s.insert(static_cast<std::size_t>(i - 1));
  }
  return s;
}

/// `1,3` or `{1,3}`.
inline IndexSet parse_index_list(std::string text, std::size_t n) {
  std::vector<long long> idx;
  for (char& ch : text)
    if (ch == '{' || ch == '}') ch = ' ';
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      idx.push_back(std::stoll(tok));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad index '" + tok + "'");
    }
  }
  return from_one_based(idx, n);
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ToricVariety variety_from_json(const json& j) {
  try {
    Fan fan;
    fan.rays = j.at("rays").get<std::vector<IntVec>>();
    for (const auto& cone : j.at("max_cones")) fan.max_cones.push_back(from_one_based(cone.get<std::vector<long long>>(), fan.n()));
    if (j.contains("grading")) return build_variety(fan, j.at("grading").get<IntMatrix>());
    return build_variety(fan);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("variety: ") + e.what());
  }
}

inline json variety_to_json(const ToricVariety& x) {
  json cones = json::array();
  for (IndexSet c : x.fan().max_cones) cones.push_back(one_based(c));
  return {{"rays", x.fan().rays}, {"max_cones", cones}, {"grading", x.grading()}};
}

/// `P(d)`, `PxP(a,b)`, `Hirzebruch(l)`, or a path to a JSON variety file.
inline ToricVariety parse_variety(const std::string& spec) {
  static const std::regex proj(R"(\s*P\(\s*(\d+)\s*\)\s*)");
  static const std::regex prod(R"(\s*PxP\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex hirz(R"(\s*Hirzebruch\(\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, proj)) {
    const auto d = std::stoul(m[1]);
    if (d == 0) throw Error(ErrorKind::ParseError, "P(0) is a point");
    return builtin::projective_space(d);
  }
  if (std::regex_match(spec, m, prod)) {
    const auto a = std::stoul(m[1]), b = std::stoul(m[2]);
    if (a == 0 || b == 0) throw Error(ErrorKind::ParseError, "factors must have positive dimension");
    return builtin::product(a, b);
  }
  if (std::regex_match(spec, m, hirz)) return builtin::hirzebruch(std::stoll(m[1]));
  return variety_from_json(parse_json(read_file(spec), spec));
}

/// One monomial such as `x1^2*x3` or `1`.
inline Monomial parse_monomial(const std::string& text, std::size_t n) {
  static const std::regex factor(R"(\s*x(\d+)\s*(?:\^\s*(\d+))?\s*)");
  Monomial m(n);
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t\n"));
  s.erase(s.find_last_not_of(" \t\n") + 1);
  if (s == "1") return m;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '*')) {
    std::smatch f;
    if (!std::regex_match(part, f, factor)) throw Error(ErrorKind::ParseError, "bad monomial factor '" + part + "'");
    const auto idx = std::stoul(f[1]);
    if (idx < 1 || idx > n) throw Error(ErrorKind::ParseError, "variable x" + f[1].str() + " out of range");
    m.exponents[idx - 1] += f[2].matched ? std::stoi(f[2]) : 1;
  }
  return m;
}

/// `x1^2*x2, x1*x2^2`, optionally inside `<...>`; `0` is the zero ideal.
/// A JSON object `{"generators": [[...]]}` is also accepted.
inline MonomialIdeal parse_ideal(const std::string& text, std::size_t n) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t\n"));
  s.erase(s.find_last_not_of(" \t\n") + 1);
  if (!s.empty() && s.front() == '{') {
    const json j = parse_json(s, "ideal");
    std::vector<Monomial> gens;
    try {
      for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("ideal: ") + e.what());
    }
    for (const auto& g : gens)
      if (g.nvars() != n) throw Error(ErrorKind::ParseError, "generator length does not match the variety");
    return MonomialIdeal(n, gens);
  }
  if (!s.empty() && s.front() == '<' && s.back() == '>') s = s.substr(1, s.size() - 2);
  std::vector<Monomial> gens;
  if (s == "0" || s.empty()) return MonomialIdeal::zero(n);
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) gens.push_back(parse_monomial(part, n));
  return MonomialIdeal(n, gens);
}

inline json ideal_to_json(const MonomialIdeal& i) {
  json gens = json::array();
  for (const auto& g : i.generators()) gens.push_back(g.exponents);
  return {{"generators", gens}};
}

inline MonomialIdeal ideal_from_json(const json& j, std::size_t n) { return parse_ideal(j.dump(), n); }

inline json pairs_to_json(const std::vector<StanleyPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back({{"shift", p.shift.exponents}, {"face", one_based(p.face)}});
  return arr;
}

inline std::vector<StanleyPair> pairs_from_json(const json& j) {
  std::vector<StanleyPair> out;
  try {
    for (const auto& p : j) {
      Monomial shift(p.at("shift").get<std::vector<int>>());
      out.push_back({shift, from_one_based(p.at("face").get<std::vector<long long>>(), shift.nvars())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("pairs: ") + e.what());
  }
  return out;
}

inline std::string pairs_to_text(const std::vector<StanleyPair>& pairs) {
  std::string s;
  for (const auto& p : pairs) s += p.to_string() + "\n";
  return s;
}

inline json upset_to_json(const KUpset& u, const std::string& label) {
  json j;
  if (u.has_generators())
    j["generators"] = u.generators();
  else
    j["description"] = u.to_string();
  j["assumed_baselines"] = label;
  return j;
}

/// Baseline overrides: `{"baselines": [{"face": [..], "generators": [[..]]}]}`,
/// applied on top of the default K baselines.
inline RegularityAssumption parse_assumption(const std::string& spec, const ToricVariety& x) {
  RegularityAssumption a = RegularityAssumption::default_for(x);
  if (spec.empty() || spec == "default-K") return a;
  const json j = parse_json(read_file(spec), spec);
  try {
    for (const auto& b : j.at("baselines")) {
      const IndexSet face = from_one_based(b.at("face").get<std::vector<long long>>(), x.n());
      a.baselines.insert_or_assign(face.bits, KUpset(x.nef_cone_ptr(), b.at("generators").get<std::vector<IntVec>>()));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("baselines: ") + e.what());
  }
  a.label = spec;
  return a;
}

inline std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string matrix_to_string(const IntMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "]\n";
  }
  return s;
}

}  // namespace toricreg::io
