#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "liecheck/rootsys.hpp"

namespace liecheck {

using Word = std::vector<int>;  // 0-based letters, w = s_{w[0]} s_{w[1]} ...

std::string word_to_string(const Word& w);  // 1-based, e.g. "s2s1s2"; "e" if empty

// A Weyl group element, identified by its image of rho (which is faithful).
// The stored word is the lexicographically least reduced word.
class WeylElement {
 public:
  explicit WeylElement(const RootSystem& rs);  // identity
  static WeylElement from_word(const RootSystem& rs, const Word& word);
  static WeylElement from_rho_image(const RootSystem& rs, const Weight& r) { return WeylElement(rs, r); }
  static WeylElement reflection(const RootSystem& rs, int i) { return from_word(rs, {i}); }

  const RootSystem& system() const { return *rs_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  const Weight& rho_image() const { return rho_image_; }

  Weight act(const Weight& mu) const;
  int act_root(int k) const;  // index of w(beta_k)
  RootCoeffs act_alpha(const RootCoeffs& a) const;

  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement left_mul(int i) const;   // s_i w
  WeylElement right_mul(int i) const;  // w s_i

  // l(s_i w) < l(w), equivalently w^{-1}(alpha_i) < 0
  bool is_left_descent(int i) const { return rho_image_[i] < 0; }
  // l(w s_i) < l(w), equivalently w(alpha_i) < 0
  bool is_right_descent(int i) const;

  std::vector<int> inversion_set() const;  // positive beta with w(beta) < 0

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.rho_image_ == b.rho_image_; }
  std::size_t hash() const { return rho_image_.hash(); }
  std::string to_string() const { return word_to_string(word_); }

 private:
  WeylElement(const RootSystem& rs, Weight rho_image);
  void extract_word();

  const RootSystem* rs_;
  Weight rho_image_;
  Word word_;
  std::optional<Weight> inv_rho_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

WeylElement canonicalize(const RootSystem& rs, const Word& word);
bool is_reduced(const RootSystem& rs, const Word& word);

// Subset of simple roots as a bitmask on 0-based indices.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::uint32_t mask) : mask_(mask) {}
  ParabolicSubset(std::initializer_list<int> idx) {
    for (int i : idx) mask_ |= 1u << i;
  }
  static ParabolicSubset from_indices(const std::vector<int>& idx);
  static ParabolicSubset full(int rank) { return ParabolicSubset((1u << rank) - 1); }
  ParabolicSubset complement(int rank) const { return ParabolicSubset(~mask_ & ((1u << rank) - 1)); }
  ParabolicSubset without(int i) const { return ParabolicSubset(mask_ & ~(1u << i)); }

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> indices() const;
  std::string to_string() const;  // 1-based, e.g. "{1,3}"

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
  friend auto operator<=>(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  std::uint32_t mask_ = 0;
};

WeylElement longest_element(const RootSystem& rs, ParabolicSubset J);
WeylElement min_coset_rep(const WeylElement& w, ParabolicSubset J);
bool in_min_coset_reps(const WeylElement& w, ParabolicSubset J);

// Memoized Bruhat comparison via the lifting property on left descents.
class BruhatOracle {
 public:
  bool leq(const WeylElement& u, const WeylElement& w);

 private:
  std::map<std::pair<Weight, Weight>, bool> memo_;
};

bool bruhat_leq(const WeylElement& u, const WeylElement& w);

struct Translators {
  WeylElement u;  // minimal with u^{-1}(alpha_0) = +alpha_i
  WeylElement v;  // minimal with v^{-1}(alpha_0) = -alpha_i
  int dual_coxeter = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1000000;

// Throws ShortRoot for a short simple root, DuplicateMinimal if the minimal
// solution is not unique, BudgetExceeded if the search visits more than
// `budget` elements.
Translators find_v_alpha(const RootSystem& rs, int i, std::uint64_t budget = kDefaultBudget);

// tau(j) = index of -w_{0,J}(alpha_j) for j in J, -1 elsewhere.
std::vector<int> diagram_automorphism(const RootSystem& rs, ParabolicSubset J);

// Minimal coset representatives of W/W_J in length order. Single consumer.
class CosetEnumerator {
 public:
  CosetEnumerator(const RootSystem& rs, ParabolicSubset J, std::uint64_t budget = kDefaultBudget);
  std::optional<WeylElement> next();

 private:
  void advance_level();

  const RootSystem* rs_;
  ParabolicSubset J_;
  std::vector<WeylElement> level_;
  std::size_t pos_ = 0;
};

std::vector<WeylElement> enumerate_WJ(const RootSystem& rs, ParabolicSubset J,
                                      std::uint64_t budget = kDefaultBudget);

}  // namespace liecheck
