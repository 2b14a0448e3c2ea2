#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/chevalley.hpp"
#include "liecheck/cohomology.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

// One pass/fail record. `anchor` states the mathematical claim being checked.
struct Check {
  std::string topic;
  std::string name;
  std::string anchor;
  bool pass = false;
  bool skipped = false;
  std::string witness;
};

struct CaseReport {
  std::string id;
  std::vector<Check> checks;
  bool overall() const;
  Check& add(std::string topic, std::string name, std::string anchor, bool pass, std::string witness);
};

struct VerificationReport {
  std::vector<CaseReport> cases;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool all_pass() const { return failed() == 0; }
};

struct SchubertClass {
  WeylElement w;
  ParabolicSubset Q;
};

struct StabilizerResult {
  ParabolicSubset J_stab;    // {i : min_coset_rep(s_i w, Q) <= w}
  ParabolicSubset sign_set;  // {i : w^{-1}(alpha_i) < 0}
};

StabilizerResult stabilizer_parabolic(const SchubertClass& sc, BruhatOracle* oracle = nullptr);

// x_i = w_{0,S\{r,i}} w_{0,S\{r}},  w_i = x_i v.
struct TranslatorClass {
  int i = 0;
  WeylElement x;
  WeylElement v;
  SchubertClass sc;
  Word word;  // canonical word of x_i followed by the chain word of v
};

struct ClassConstruction {
  int r = 0;        // special root: w_{0,S\{r}}(alpha_r) = alpha_0 - alpha_r
  int v_root = 0;   // v satisfies v^{-1}(alpha_0) = -alpha_{v_root}
  int d = 0;        // target parabolic Q = {d}
  Word v_word;      // defining reduced word of v
  Word chain_word;  // word of v used for cohomology chains
  std::vector<TranslatorClass> classes;
};

// Types B (n >= 2), C (n >= 3), F4, G2; UnsupportedType otherwise.
ClassConstruction construct_translator_classes(const RootSystem& rs);

CaseReport verify_noncominuscule_case(const LieAlgebra& lie, const ClassConstruction& cc, const TranslatorClass& tc);

// Exhaustive over nonempty J and W^J. `r` must be co-minuscule.
CaseReport cominuscule_scan(const RootSystem& rs, int r, std::uint64_t budget = kDefaultBudget);

// Existence premises for every non-co-minuscule root, scans for the rest.
std::vector<CaseReport> classification_report(const LieAlgebra& lie, std::uint64_t budget = kDefaultBudget);

// Shared helpers for report witnesses.
std::string alpha_string(const RootCoeffs& a);  // e.g. "a1+2a2", "-(a1+a2)", "0"
std::string indices_string(const std::vector<int>& idx);  // 1-based "{1,3}"

}  // namespace liecheck
