#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/character.hpp"
#include "liecheck/chevalley.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

// Letters are consumed right to left: for w = s_{i1} ... s_{ik} the first
// step applies s_{ik}. step_h0[k] is the module after k letters.
struct CohomChainResult {
  Word word;
  std::vector<TSubspace> step_h0;
  std::vector<StringDecomp> step_strings;  // decomposition of step_h0[k] for letter k+1
  std::vector<CharacterPoly> step_h1;
  bool all_vanish = true;       // every step_h1 is zero
  int inconclusive_step = -1;   // first step (1-based) with nonzero H^1 character

  const TSubspace& final_h0() const { return step_h0.back(); }
  std::vector<int> dims() const;
};

CohomChainResult h0_chain(const Word& word, const TSubspace& M);

struct H1Certificate {
  bool vanishes = true;
  int step = -1;
  CharacterPoly character;
};

H1Certificate h1_certificate(const Word& word, const TSubspace& M);

// D_i f = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i})
CharacterPoly demazure_operator(const RootSystem& rs, int i, const CharacterPoly& f);
// D_{i1} o ... o D_{ik}
CharacterPoly demazure_word(const RootSystem& rs, const Word& word, const CharacterPoly& f);

// nullopt when the chain certificate does not vanish.
std::optional<bool> euler_crosscheck(const Word& word, const TSubspace& M);

// Every H^j(w, C_lambda) vanishes when w has a right descent s with
// <lambda, alpha_s^vee> = -1.
bool line_bundle_vanishes(const WeylElement& w, const Weight& lambda);

struct ParabolicVanishing {
  Word word;
  ParabolicSubset J;
  CohomChainResult direct;
  bool h0_zero = false;
  bool h1_vanishes = false;
  std::optional<bool> euler;
  // Route through 0 -> b -> p_J -> p_J/b -> 0 (singleton J only).
  bool les_applicable = false;
  bool les_borel_vanishes = false;
  bool les_line_vanishes = false;
  bool vanishes() const { return h0_zero && h1_vanishes; }
  // H^0(w, g/p_J) = g when H^0 = H^1 = 0 on p_J
  std::optional<int> derived_quotient_dim;
  std::string summary() const;
};

ParabolicVanishing parabolic_vanishing(const LieAlgebra& lie, const Word& word, ParabolicSubset J);

// Depth-first search over reduced words of w for one whose chain on M has
// every step H^1 zero. Budget counts chain steps evaluated.
std::optional<Word> search_vanishing_word(const WeylElement& w, const TSubspace& M, std::uint64_t budget = 200000);

}  // namespace liecheck
