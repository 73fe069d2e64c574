#pragma once

// Command-line front end. `run` returns the exit status: 0 on success, 1 on
// a library error, 2 on malformed input.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricreg/enumerate.hpp"
#include "toricreg/error.hpp"
#include "toricreg/gotzmann.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/hilbscheme.hpp"
#include "toricreg/io.hpp"
#include "toricreg/regularity.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"

namespace toricreg::cli {

using nlohmann::json;

namespace detail {

inline VariableChoice strategy_from(const std::string& name, const ToricVariety& x) {
  if (name == "default") return default_strategy();
  if (name == "nice") return nice_strategy(x, graded_total_order(x, GradedOrder::glex(x.r())));
  if (name.rfind("replay:", 0) == 0) {
    std::vector<std::size_t> choices;
    std::stringstream ss(name.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        const long v = std::stol(tok);
        if (v < 1) throw std::invalid_argument("index");
        choices.push_back(static_cast<std::size_t>(v - 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad replay choice '" + tok + "'");
      }
    }
    return replay_strategy(choices);
  }
  throw Error(ErrorKind::ParseError, "unknown strategy '" + name + "' (default, nice, replay:i,j,...)");
}

inline std::string upset_text(const KUpset& u, const std::string& label) {
  return u.to_string() + "  [assuming baselines: " + label + "]\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley filtrations, Hilbert polynomials and regularity bounds on smooth projective toric varieties", "toricreg"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string variety_spec, ideal_text, poly_text, strategy = "default", baseline = "default-K", face_text;
  std::size_t vars = 0;
  std::uint64_t seed = 1;
  bool ring = false;

  auto add_variety = [&](CLI::App* sub) { sub->add_option("--variety", variety_spec, "P(d), PxP(a,b), Hirzebruch(l) or a JSON file")->required(); };

  auto* variety_cmd = app.add_subcommand("variety", "grading, faces and nef cone of a variety");
  add_variety(variety_cmd);
  auto* stanley_cmd = app.add_subcommand("stanley", "Stanley filtration of S/I");
  add_variety(stanley_cmd);
  stanley_cmd->add_option("--ideal", ideal_text, "generators such as \"x1^2*x2, x3\"")->required();
  stanley_cmd->add_option("--strategy", strategy, "default, nice, or replay:i,j,...");
  auto* hilbert_cmd = app.add_subcommand("hilbert", "multigraded Hilbert polynomial");
  add_variety(hilbert_cmd);
  auto* ideal_opt = hilbert_cmd->add_option("--ideal", ideal_text, "ideal I for S/I");
  auto* ring_opt = hilbert_cmd->add_flag("--ring", ring, "the whole Cox ring");
  auto* face_opt = hilbert_cmd->add_option("--face", face_text, "face ring S_sigma, e.g. 1,2");
  ideal_opt->excludes(ring_opt)->excludes(face_opt);
  ring_opt->excludes(face_opt);
  auto* reg_cmd = app.add_subcommand("regularity", "regularity region from a filtration or a Hilbert polynomial");
  add_variety(reg_cmd);
  auto* reg_ideal = reg_cmd->add_option("--ideal", ideal_text, "ideal I");
  auto* reg_poly = reg_cmd->add_option("--poly", poly_text, "Hilbert polynomial");
  reg_ideal->excludes(reg_poly);
  reg_cmd->add_option("--assume-baseline", baseline, "default-K or a JSON baseline file");
  reg_cmd->add_option("--strategy", strategy, "filtration strategy for --ideal");
  auto* enum_cmd = app.add_subcommand("enumerate", "all saturated monomial ideals with a Hilbert polynomial");
  add_variety(enum_cmd);
  enum_cmd->add_option("--poly", poly_text, "Hilbert polynomial")->required();
  auto* gotz_cmd = app.add_subcommand("gotzmann", "Gotzmann representation and lexicographic ideal");
  gotz_cmd->add_option("--poly", poly_text, "Hilbert polynomial in t")->required();
  gotz_cmd->add_option("--vars", vars, "number of variables of the polynomial ring")->required();
  auto* lex_cmd = app.add_subcommand("lex", "saturated lexicographic ideal with its filtration");
  lex_cmd->add_option("--poly", poly_text, "Hilbert polynomial in t")->required();
  lex_cmd->add_option("--vars", vars, "number of variables of the polynomial ring")->required();
  auto* deg_cmd = app.add_subcommand("degset", "degree set for the Hilbert scheme");
  add_variety(deg_cmd);
  deg_cmd->add_option("--poly", poly_text, "Hilbert polynomial")->required();
  deg_cmd->add_option("--seed", seed, "seed for the general points");
  for (auto* sub : {variety_cmd, stanley_cmd, hilbert_cmd, reg_cmd, enum_cmd, gotz_cmd, lex_cmd, deg_cmd})
    sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> argv_store{"toricreg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (variety_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      const auto u = positive_orthant_change(x);
      const IntVec c = find_c(x);
      if (as_json) {
        json j = io::variety_to_json(x);
        j["nef_rays"] = x.nef_cone().rays();
        j["c"] = c;
        j["orthant_change"] = u.matrix;
        j["faces"] = x.faces().size();
        out << j.dump() << "\n";
      } else {
        out << "n=" << x.n() << " d=" << x.d() << " r=" << x.r() << "\n";
        out << "grading:\n" << io::matrix_to_string(x.grading());
        out << "faces: " << x.faces().size() << "\n";
        out << "irrelevant ideal: <";
        bool first = true;
        for (const auto& g : x.irrelevant_gens()) {
          if (!g.minimal) continue;
          out << (first ? "" : ", ") << Monomial(g.exponents).to_string();
          first = false;
        }
        out << ">\n";
        out << "nef cone rays:";
        for (const auto& ray : x.nef_cone().rays()) out << " " << io::vec_to_string(ray);
        out << "\nc = " << io::vec_to_string(c) << "\n";
        out << "orthant change:\n" << io::matrix_to_string(u.matrix);
      }
    } else if (stanley_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      const MonomialIdeal i = io::parse_ideal(ideal_text, x.n());
      const auto pairs = stanley_decompose(i, detail::strategy_from(strategy, x)).filtration();
      if (as_json)
        out << json{{"ideal", io::ideal_to_json(i)}, {"pairs", io::pairs_to_json(pairs)}}.dump() << "\n";
      else
        out << io::pairs_to_text(pairs);
    } else if (hilbert_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      MultiPoly p(x.r());
      if (ring) {
        p = ring_hilbert_polynomial(x);
      } else if (!face_text.empty()) {
        p = face_hilbert_polynomial(x, io::parse_index_list(face_text, x.n()));
      } else if (!ideal_text.empty()) {
        p = quotient_hilbert_polynomial(x, io::parse_ideal(ideal_text, x.n()));
      } else {
        err << "error: one of --ring, --face, --ideal is required\n";
        return 2;
      }
      if (as_json)
        out << json{{"polynomial", to_string(p)}}.dump() << "\n";
      else
        out << to_string(p) << "\n";
    } else if (reg_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      const RegularityAssumption assume = io::parse_assumption(baseline, x);
      if (!ideal_text.empty()) {
        const MonomialIdeal i = io::parse_ideal(ideal_text, x.n());
        const auto filt = stanley_decompose(i, detail::strategy_from(strategy, x)).filtration();
        const KUpset bound = reg_bound_from_filtration(x, i, filt, assume);
        if (as_json)
          out << io::upset_to_json(bound, assume.label).dump() << "\n";
        else
          out << detail::upset_text(bound, assume.label);
      } else if (!poly_text.empty()) {
        std::size_t m = 0;
        const KUpset bound = reg_bound_from_polynomial(x, parse_polynomial(poly_text, x.r()), assume, &m);
        if (as_json) {
          json j = io::upset_to_json(bound, assume.label);
          j["gotzmann"] = m;
          out << j.dump() << "\n";
        } else {
          out << "gotzmann=" << m << "\n" << detail::upset_text(bound, assume.label);
        }
      } else {
        err << "error: one of --ideal, --poly is required\n";
        return 2;
      }
    } else if (enum_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      const MultiPoly p = parse_polynomial(poly_text, x.r());
      const auto res = enumerate_saturated_ideals(x, p);
      std::ostringstream summary;
      summary << "count=" << res.ideals.size() << " gotzmann=" << res.gotzmann_number << "\n";
      if (as_json) {
        json arr = json::array();
        for (const auto& e : res.ideals) arr.push_back({{"ideal", io::ideal_to_json(e.ideal)}, {"pairs", io::pairs_to_json(e.pairs)}});
        out << arr.dump() << "\n";
        err << summary.str();
      } else {
        for (const auto& e : res.ideals) {
          out << e.ideal.to_string() << "\n";
          for (const auto& pr : e.pairs) out << "  " << pr.to_string() << "\n";
        }
        out << summary.str();
      }
    } else if (gotz_cmd->parsed() || lex_cmd->parsed()) {
      const MultiPoly p = parse_polynomial(poly_text, 1);
      const LexIdeal lex = lex_ideal(p, vars);
      if (as_json) {
        out << json{{"m", lex.rep.length()},
                    {"q", lex.rep.q},
                    {"ideal", io::ideal_to_json(lex.ideal)},
                    {"pairs", io::pairs_to_json(lex.filtration)}}
                   .dump()
            << "\n";
      } else {
        if (gotz_cmd->parsed()) {
          out << "m=" << lex.rep.length() << "\nq=(";
          for (std::size_t i = 0; i < lex.rep.q.size(); ++i) out << (i ? "," : "") << lex.rep.q[i];
          out << ")\n";
        }
        out << lex.ideal.to_string() << "\n" << io::pairs_to_text(lex.filtration);
      }
    } else if (deg_cmd->parsed()) {
      const ToricVariety x = io::parse_variety(variety_spec);
      const MultiPoly p = parse_polynomial(poly_text, x.r());
      DegreeSetOptions opt;
      opt.seed = seed;
      const auto res = degree_set(x, p, opt);
      const auto report = verify_supportive(x, p, res, 6);
      if (as_json) {
        json trace = json::array();
        for (const auto& s : res.trace)
          trace.push_back({{"candidates", s.candidates}, {"failing", s.failing}, {"witnesses", s.witnesses},
                           {"bound", s.bound}, {"general", s.general}});
        out << json{{"points", res.points}, {"k", res.k}, {"gotzmann", res.gotzmann}, {"seed", res.seed},
                    {"fixpoint", res.fixpoint}, {"trace", trace}, {"supportive", report.ok}}
                   .dump()
            << "\n";
      } else {
        out << "k=" << io::vec_to_string(res.k) << " gotzmann=" << res.gotzmann << " seed=" << res.seed << "\n";
        for (std::size_t it = 0; it < res.trace.size(); ++it) {
          const auto& s = res.trace[it];
          out << "iteration " << it + 1 << ": candidates=" << s.candidates << " failing=" << s.failing;
          if (!s.witnesses.empty()) {
            out << " witnesses=";
            for (const auto& t : s.witnesses) out << io::vec_to_string(t);
          }
          if (!s.bound.empty()) out << " bound=" << io::vec_to_string(s.bound);
          out << "\n";
        }
        out << "D = {";
        for (std::size_t k = 0; k < res.points.size(); ++k) out << (k ? ", " : "") << io::vec_to_string(res.points[k]);
        out << "}\n";
        out << "fixpoint=" << (res.fixpoint ? "yes" : "no") << " supportive=" << (report.ok ? "yes" : "no")
            << " (" << report.candidates << " candidates)\n";
        if (!report.ok) out << report.failure << "\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace toricreg::cli
