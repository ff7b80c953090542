#pragma once

// Command-line front end: parses the SFS grammar, dispatches to the other
// modules, and reports in text or JSON. Exit-code contract:
//   0 success / sets equal, 1 usage or input error,
//   2 verified-unequal (with a witness dump), 3 search budget exceeded.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfq/catalogue.hpp"
#include "sfq/quotient_set.hpp"
#include "sfq/semidirect.hpp"
#include "sfq/sfs_text.hpp"
#include "sfq/smith.hpp"

namespace sfq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnequal = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

using nlohmann::json;

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    default: return "hyperbolic";
  }
}

inline json classification_json(const SeifertData& m) {
  auto c = classify(m);
  json j;
  j["sfs"] = format_sfs(m);
  j["euler_number"] = c.euler_number ? json(rat_str(*c.euler_number)) : json(nullptr);
  j["orbifold_chi"] = rat_str(c.orbifold_chi);
  j["lambda"] = c.lambda;
  j["geometry"] = geometry_name(c.geometry);
  j["parity"] = c.parity == Parity::OddType ? "odd" : "even";
  j["periodic_bundle"] = c.is_periodic_bundle;
  j["fiber_genus"] = c.fiber_genus ? json(*c.fiber_genus) : json(nullptr);
  return j;
}

inline json quotient_set_json(const QuotientSet& qs) {
  json classes = json::array();
  std::istringstream lines(serialize(qs));
  for (std::string line; std::getline(lines, line);) classes.push_back(line);
  return json{{"bound", qs.bound},
              {"paired", qs.paired},
              {"count", qs.classes.size()},
              {"classes", classes}};
}

inline json word_json(const Word& w, const std::vector<std::string>& names) {
  return json(format_word(w, names));
}

struct CommandIO {
  std::ostream& out;
  bool as_json = false;
  json doc;

  void emit_text(const std::string& text) {
    if (!as_json) out << text << '\n';
  }
  void finish(const std::vector<std::string>& args) {
    if (as_json) {
      doc["command"] = args;
      out << doc.dump(2) << '\n';
    }
  }
};

}  // namespace detail

/// Run one command; arguments exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"Seifert invariants, presentations, and finite quotient sets"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document");

  std::string sfs1, sfs2, witness_word;
  std::int64_t k = 0, lens_b = 0, alpha1 = 0, alpha2 = 0, prime = 0, order = 0;
  int max_index = 6;
  std::int64_t budget_nodes = SearchBudget{}.max_nodes;
  bool oriented = false, paired_flag = false;
  std::int64_t power_k = 0;
  bool power_given = false;
  int rank = 0, hom_bound = 0;
  std::vector<std::string> image_words, inverse_words;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget_nodes, "search-node budget");
  };

  auto* c_classify = app.add_subcommand("classify", "invariants of one manifold");
  c_classify->add_option("sfs", sfs1)->required();

  auto* c_reverse = app.add_subcommand("reverse", "orientation reversal");
  c_reverse->add_option("sfs", sfs1)->required();

  auto* c_power = app.add_subcommand("power", "monodromy power M_{phi^k}");
  c_power->add_option("sfs", sfs1)->required();
  c_power->add_option("k", k)->required();

  auto* c_homeo = app.add_subcommand("homeo", "homeomorphism test");
  c_homeo->add_option("sfs1", sfs1)->required();
  c_homeo->add_option("sfs2", sfs2)->required();
  c_homeo->add_flag("--oriented", oriented);

  auto* c_dist = app.add_subcommand("distinguish", "smallest k with M_{phi^k} != M");
  c_dist->add_option("sfs", sfs1)->required();

  auto* c_family = app.add_subcommand("family", "torus-knot family C(a1, a2)");
  c_family->add_option("alpha1", alpha1)->required();
  c_family->add_option("alpha2", alpha2)->required();

  auto* c_residue = app.add_subcommand("residue-family", "quadratic-residue manifold");
  c_residue->add_option("p", prime)->required();

  auto* c_lens = app.add_subcommand("lens", "ambient Lens space parameters");
  c_lens->add_option("sfs", sfs1)->required();
  c_lens->add_option("b", lens_b)->required();

  auto* c_present = app.add_subcommand("present", "fundamental group presentation");
  c_present->add_option("sfs", sfs1)->required();

  auto* c_quot = app.add_subcommand("quotients", "finite quotient classes up to an index bound");
  c_quot->add_option("sfs", sfs1)->required();
  c_quot->add_option("--max-index", max_index);
  c_quot->add_flag("--paired", paired_flag);
  add_budget(c_quot);

  auto* c_compare = app.add_subcommand("compare", "compare finite quotient sets");
  c_compare->add_option("sfs1", sfs1)->required();
  c_compare->add_option("sfs2", sfs2);
  c_compare->add_option("--power", power_k);
  c_compare->add_option("--max-index", max_index);
  add_budget(c_compare);

  auto* c_pairs = app.add_subcommand("compare-pairs", "compare peripheral pair quotient sets");
  c_pairs->add_option("sfs1", sfs1)->required();
  c_pairs->add_option("sfs2", sfs2);
  c_pairs->add_option("--power", power_k);
  c_pairs->add_option("--max-index", max_index);
  add_budget(c_pairs);

  auto* c_gn = app.add_subcommand("gn", "G/G(n), the joint quotient at index bound n");
  c_gn->add_option("sfs", sfs1)->required();
  c_gn->add_option("--max-index", max_index);
  add_budget(c_gn);

  auto* c_lemma = app.add_subcommand("lemma21", "basis change G_psi x Z = G_{psi^k} x Z");
  c_lemma->add_option("--rank", rank, "rank of the free fiber group")->required();
  c_lemma->add_option("--image", image_words, "image of each generator under psi")->required();
  c_lemma->add_option("--inverse", inverse_words, "image of each generator under psi^-1")
      ->required();
  c_lemma->add_option("--order", order, "declared outer order of psi")->required();
  c_lemma->add_option("--witness", witness_word, "inner witness g with psi^n = i_g");
  c_lemma->add_option("-k,--k", k, "the power")->required();
  c_lemma->add_option("--hom-bound", hom_bound,
                      "also print homomorphism counts to catalogue groups up to this order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  detail::CommandIO io{out, as_json, json::object()};
  SearchBudget budget;
  budget.max_nodes = budget_nodes;

  try {
    if (c_classify->parsed()) {
      auto m = parse_sfs(sfs1);
      auto c = classify(m);
      io.doc["result"] = detail::classification_json(m);
      std::ostringstream os;
      os << format_sfs(m) << '\n';
      os << "e        = " << (c.euler_number ? detail::rat_str(*c.euler_number) : "undefined")
         << '\n';
      os << "chi^orb  = " << detail::rat_str(c.orbifold_chi) << '\n';
      os << "lambda   = " << c.lambda << '\n';
      os << "geometry = " << detail::geometry_name(c.geometry) << '\n';
      os << "parity   = " << (c.parity == Parity::OddType ? "odd" : "even") << '\n';
      os << "bundle   = " << (c.is_periodic_bundle ? "yes" : "no") << '\n';
      os << "fiber genus = "
         << (c.fiber_genus ? std::to_string(*c.fiber_genus) : std::string("undefined"));
      io.emit_text(os.str());
    } else if (c_reverse->parsed()) {
      auto r = reverse_orientation(parse_sfs(sfs1));
      io.doc["result"] = {{"sfs", format_sfs(r)}};
      io.emit_text(format_sfs(r));
    } else if (c_power->parsed()) {
      auto r = power_monodromy(parse_sfs(sfs1), k);
      io.doc["result"] = {{"sfs", format_sfs(r)}};
      io.emit_text(format_sfs(r));
    } else if (c_homeo->parsed()) {
      auto m = parse_sfs(sfs1), n = parse_sfs(sfs2);
      bool same = is_homeomorphic(m, n, oriented);
      io.doc["result"] = {{"homeomorphic", same},
                          {"oriented", oriented},
                          {"sfs1", format_sfs(m)},
                          {"sfs2", format_sfs(n)}};
      io.emit_text(same ? "HOMEOMORPHIC" : "NOT HOMEOMORPHIC");
      io.finish(args);
      return same ? kExitOk : kExitUnequal;
    } else if (c_dist->parsed()) {
      auto m = parse_sfs(sfs1);
      auto found = find_distinguishing_k(m);
      io.doc["result"] = {{"k", found ? json(*found) : json(nullptr)}};
      io.emit_text(found ? "k = " + std::to_string(*found)
                         : std::string("none (every power is homeomorphic)"));
    } else if (c_family->parsed()) {
      auto fam = family_enumerate(alpha1, alpha2);
      json list = json::array();
      std::ostringstream os;
      os << "count = " << fam.size();
      for (const auto& m : fam) {
        list.push_back(format_sfs(m));
        os << '\n' << format_sfs(m);
      }
      io.doc["result"] = {{"count", fam.size()}, {"representatives", list}};
      io.emit_text(os.str());
    } else if (c_residue->parsed()) {
      auto m = residue_family(prime);
      io.doc["result"] = {{"sfs", format_sfs(m)}};
      io.emit_text(format_sfs(m));
    } else if (c_lens->parsed()) {
      auto m = parse_sfs(sfs1);
      auto l = lens_invariants(m, lens_b);
      io.doc["result"] = {{"p", l.p.str()},
                          {"q", l.q.str()},
                          {"gamma1", l.gamma1.str()},
                          {"delta1", l.delta1.str()},
                          {"q_formula", "paper-verbatim"}};
      std::ostringstream os;
      os << "L(p, q) with p = " << l.p << ", q = " << l.q << " (q formula paper-verbatim)\n";
      os << "bezout: gamma1 = " << l.gamma1 << ", delta1 = " << l.delta1;
      io.emit_text(os.str());
    } else if (c_present->parsed()) {
      auto m = parse_sfs(sfs1);
      auto p = sfs_presentation(m);
      io.doc["result"] = {{"presentation", to_text(p)}};
      io.emit_text(to_text(p));
    } else if (c_quot->parsed()) {
      auto m = parse_sfs(sfs1);
      auto qs = quotient_set(sfs_presentation(m), max_index, paired_flag, budget);
      io.doc["result"] = detail::quotient_set_json(qs);
      std::ostringstream os;
      os << "bound=" << qs.bound << " paired=" << (qs.paired ? 1 : 0)
         << " classes=" << qs.classes.size() << '\n'
         << serialize(qs);
      std::string text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      io.emit_text(text);
    } else if (c_compare->parsed() || c_pairs->parsed()) {
      bool paired = c_pairs->parsed();
      auto* cmd = paired ? c_pairs : c_compare;
      power_given = cmd->count("--power") > 0;
      bool second_given = cmd->count("sfs2") > 0;
      if (power_given == second_given)
        throw std::invalid_argument("compare: provide exactly one of <sfs2> or --power k");
      auto m = parse_sfs(sfs1);
      auto n = power_given ? power_monodromy(m, power_k) : parse_sfs(sfs2);
      auto res = compare_quotient_sets(sfs_presentation(m), sfs_presentation(n), max_index,
                                       paired, budget);
      io.doc["result"] = {{"equal", res.equal},
                          {"bound", max_index},
                          {"paired", paired},
                          {"sfs1", format_sfs(m)},
                          {"sfs2", format_sfs(n)}};
      if (res.equal) {
        io.emit_text("EQUAL (bound " + std::to_string(max_index) + ")");
      } else {
        QuotientSet one;
        one.bound = max_index;
        one.paired = paired;
        one.classes.push_back(*res.witness);
        io.doc["result"]["witness_side"] = res.witness_side;
        io.doc["result"]["witness"] = detail::quotient_set_json(one)["classes"][0];
        std::ostringstream os;
        os << "UNEQUAL (bound " << max_index << ")\n"
           << "witness quotient of " << (res.witness_side == 1 ? "sfs1" : "sfs2")
           << " only:\n"
           << serialize(one);
        std::string text = os.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        io.emit_text(text);
        io.finish(args);
        return kExitUnequal;
      }
    } else if (c_gn->parsed()) {
      auto m = parse_sfs(sfs1);
      auto p = sfs_presentation(m);
      auto gn = g_n(p, max_index, budget);
      json gens = json::array();
      std::ostringstream os;
      os << "|G/G(" << max_index << ")| = " << gn.quotient.order;
      for (std::size_t i = 0; i < gn.generator_images.size(); ++i) {
        gens.push_back(gn.generator_images[i]);
        os << '\n' << p.generator_names[i] << " -> element " << gn.generator_images[i];
      }
      io.doc["result"] = {{"bound", max_index},
                          {"order", gn.quotient.order},
                          {"generator_images", gens}};
      io.emit_text(os.str());
    } else if (c_lemma->parsed()) {
      if (rank < 1 || rank > 26) throw std::invalid_argument("lemma21: rank must be in 1..26");
      std::vector<std::string> names;
      for (int i = 0; i < rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
      if (static_cast<int>(image_words.size()) != rank ||
          static_cast<int>(inverse_words.size()) != rank)
        throw std::invalid_argument("lemma21: need exactly one --image and --inverse per generator");
      FreeAutomorphism psi;
      psi.order = order;
      for (const auto& w : image_words) psi.images.push_back(parse_word(w, names));
      for (const auto& w : inverse_words) psi.inverse_images.push_back(parse_word(w, names));
      if (!witness_word.empty()) psi.inner_witness = parse_word(witness_word, names);
      Presentation n_pres;
      n_pres.generator_names = names;

      auto res = lemma21_iso(n_pres, WordReducer::free_group(rank), psi, k);
      json map = json::array();
      std::ostringstream os;
      os << "u*n + v*k = 1 with n = " << res.basis.n << ", k = " << res.basis.k
         << ", u = " << res.basis.u << ", v = " << res.basis.v << '\n';
      for (const auto& [name, image] : res.generator_map) {
        std::string img = format_word(image, res.target.generator_names);
        map.push_back({{"generator", name}, {"image", img}});
        os << name << " -> " << img << '\n';
      }
      os << "verified: every relator image reduces to the identity";
      io.doc["result"] = {{"n", res.basis.n},
                          {"k", res.basis.k},
                          {"u", res.basis.u},
                          {"v", res.basis.v},
                          {"map", map},
                          {"verified", true}};
      if (hom_bound > 0) {
        auto sig_src = hom_count_signature(res.source, hom_bound, budget);
        auto sig_tgt = hom_count_signature(res.target, hom_bound, budget);
        json sig = json::object();
        os << "\nhom counts (bound " << hom_bound << "):";
        for (const auto& [name, count] : sig_src) {
          sig[name] = {{"source", count}, {"target", sig_tgt.at(name)}};
          os << '\n'
             << "  " << name << ": source = " << count << ", target = " << sig_tgt.at(name)
             << (count == sig_tgt.at(name) ? "" : "  MISMATCH");
        }
        io.doc["result"]["hom_counts"] = sig;
      }
      io.emit_text(os.str());
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }

  io.finish(args);
  return kExitOk;
}

}  // namespace sfq::cli
