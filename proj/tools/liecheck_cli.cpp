#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "liecheck/chevalley.hpp"
#include "liecheck/cohomology.hpp"
#include "liecheck/errors.hpp"
#include "liecheck/report.hpp"
#include "liecheck/rootsys.hpp"
#include "liecheck/schubert.hpp"
#include "liecheck/weyl.hpp"

using namespace liecheck;

namespace {

int cmd_tables(const RootSystem& rs) {
  std::cout << "type " << rs.label() << "\n";
  std::cout << "highest root: " << alpha_string(rs.highest_root().alpha) << "\n";
  std::cout << "co-minuscule: " << indices_string(rs.co_minuscule_roots()) << "\n";
  std::cout << "minuscule weights: " << indices_string(rs.minuscule_weights()) << "\n";
  std::cout << "g = " << rs.dual_coxeter_number() << "\n";
  std::cout << "|W| = " << rs.weyl_group_order() << "\n";
  std::cout << "positive roots: " << rs.num_positive() << "\n";
  return 0;
}

int cmd_roots(const RootSystem& rs) {
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Root& r = rs.root(k);
    std::cout << "h" << r.height << "  " << alpha_string(r.alpha) << "  omega " << r.omega.to_string()
              << (rs.simply_laced() ? "" : r.is_long() ? "  long" : "  short") << "\n";
  }
  return 0;
}

int cmd_weyl(const RootSystem& rs, const Word& word) {
  const WeylElement w = WeylElement::from_word(rs, word);
  std::cout << "input " << word_to_string(word) << (is_reduced(rs, word) ? " (reduced)" : " (not reduced)") << "\n";
  std::cout << "canonical " << w.to_string() << ", length " << w.length() << "\n";
  std::cout << "rho image " << w.rho_image().to_string() << "\n";
  std::vector<int> ld, rd;
  for (int i = 0; i < rs.rank(); ++i) {
    if (w.is_left_descent(i)) ld.push_back(i);
    if (w.is_right_descent(i)) rd.push_back(i);
  }
  std::cout << "left descents " << indices_string(ld) << ", right descents " << indices_string(rd) << "\n";
  std::cout << "inversions:";
  for (int k : w.inversion_set()) std::cout << " " << alpha_string(rs.root(k).alpha);
  std::cout << "\n";
  std::cout << "w^-1(a0) = " << alpha_string(w.inverse().act_alpha(rs.highest_root().alpha)) << "\n";
  return 0;
}

TSubspace parse_module(const LieAlgebra& lie, const std::string& m) {
  if (m == "b") return TSubspace::borel(lie);
  if (m == "g") return TSubspace::full(lie);
  if (m.rfind("p:", 0) == 0) {
    Word idx = parse_word(m.substr(2), lie.system().rank());
    return TSubspace::parabolic(lie, ParabolicSubset::from_indices(idx));
  }
  throw ConfigError("module must be b, g or p:<J>");
}

int cmd_cohomology(const RootSystem& rs, const std::string& module, const Word& word) {
  LieAlgebra lie(rs);
  TSubspace M = parse_module(lie, module);
  CohomChainResult r = h0_chain(word, M);
  std::cout << "word " << word_to_string(word) << " on " << module << " (letters consumed right to left)\n";
  std::cout << "dims";
  for (int d : r.dims()) std::cout << " " << d;
  std::cout << "\n";
  for (std::size_t k = 0; k < r.step_h1.size(); ++k)
    if (!r.step_h1[k].is_zero())
      std::cout << "step " << k + 1 << " H^1 character " << r.step_h1[k].to_string(rs) << "\n";
  std::cout << "final H^0 dim " << r.final_h0().dim() << ": " << r.final_h0().character().to_string(rs) << "\n";
  if (r.all_vanish) {
    std::cout << "H^1 certificate: AllVanish\n";
    auto eu = euler_crosscheck(word, M);
    std::cout << "Euler cross-check: " << (eu.value_or(false) ? "agrees" : "disagrees") << "\n";
  } else {
    std::cout << "H^1 certificate: Inconclusive at step " << r.inconclusive_step << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root-system, Weyl-group and Schubert-class checks"};
  app.require_subcommand(1);

  std::string type;
  int rank = 0;
  std::string word_s;
  std::string module = "b";
  std::vector<std::string> checks;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  std::string format = "json";
  int jobs = 1;

  auto add_target = [&](CLI::App* sc, bool required) {
    auto* t = sc->add_option("--type", type, "Cartan type letter A-G");
    auto* r = sc->add_option("--rank", rank, "rank");
    if (required) {
      t->required();
      r->required();
    }
  };
  auto* tables = app.add_subcommand("tables", "co-minuscule roots, minuscule weights, dual Coxeter number");
  add_target(tables, true);
  auto* roots = app.add_subcommand("roots", "positive roots by height");
  add_target(roots, true);
  auto* weyl = app.add_subcommand("weyl", "canonical form and data of a word");
  add_target(weyl, true);
  weyl->add_option("--word", word_s, "1-based comma-separated word")->required();
  auto* coh = app.add_subcommand("cohomology", "H^0 chain and H^1 certificate along a reduced word");
  add_target(coh, true);
  coh->add_option("--module", module, "b, g or p:<J> with J 1-based comma-separated");
  coh->add_option("--word", word_s, "1-based comma-separated reduced word")->required();
  auto* verify = app.add_subcommand("verify", "run the verification suite and write a report");
  add_target(verify, false);
  verify->add_option("--checks", checks, "groups: tables translators words f4-roots cohomology constructions scans all")
      ->delimiter(',');
  verify->add_option("--word", word_s, "override for the chain word of v (1-based)");
  verify->add_option("--budget", budget, "enumeration budget");
  verify->add_option("--out", out, "report path (default stdout)");
  verify->add_option("--format", format, "json or markdown");
  verify->add_option("--jobs", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    if (*verify) {
      RunConfig cfg;
      if (!type.empty() || rank) {
        if (type.empty() || !rank) throw ConfigError("--type and --rank go together");
        cfg.targets.push_back(parse_type(type, rank));
      } else {
        cfg.targets = default_targets();
      }
      cfg.checks.insert(checks.begin(), checks.end());
      if (!word_s.empty()) {
        if (cfg.targets.size() != 1) throw ConfigError("--word requires a single target");
        cfg.word_override = parse_word(word_s, rank);
      }
      cfg.budget = budget;
      cfg.out = out;
      cfg.format = format;
      cfg.jobs = jobs;
      return run(cfg, std::cerr);
    }
    auto [t, n] = parse_type(type, rank);
    RootSystem rs(t, n);
    if (*tables) return cmd_tables(rs);
    if (*roots) return cmd_roots(rs);
    if (*weyl) return cmd_weyl(rs, parse_word(word_s, n));
    if (*coh) return cmd_cohomology(rs, module, parse_word(word_s, n));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidType& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 4;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
