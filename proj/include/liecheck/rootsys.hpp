#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "liecheck/errors.hpp"
#include "liecheck/lattice.hpp"

namespace liecheck {

enum class LengthClass { Long, Short };

struct Root {
  RootCoeffs alpha;   // coefficients over simple roots
  Weight omega;       // pairings with the simple coroots
  RootCoeffs coroot;  // coefficients of the coroot over simple coroots
  LengthClass length_class = LengthClass::Long;
  int height = 0;

  bool positive() const { return height > 0; }
  bool is_long() const { return length_class == LengthClass::Long; }
};

// Simple roots are indexed 0..rank-1 internally (Bourbaki numbering shifted
// by one). Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so that
// s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // Positives first (by height, then decreasing lexicographic alpha), then
  // negatives in the same order. roots()[i] == alpha_i for i < rank.
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int k) const { return roots_[k]; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  int negative_of(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }

  std::optional<int> index_of(const RootCoeffs& alpha) const;
  std::optional<int> index_of_weight(const Weight& omega) const;

  const Root& highest_root() const { return roots_[highest_]; }
  int highest_root_index() const { return highest_; }
  std::optional<int> highest_short_root_index() const { return highest_short_; }

  bool simply_laced() const { return simply_laced_; }
  bool simple_is_long(int i) const { return sqlen_[i] == max_sqlen_; }
  // Squared length of alpha_i with short roots normalized to 1.
  int simple_sqlen(int i) const { return sqlen_[i]; }
  int long_sqlen() const { return max_sqlen_; }
  int root_sqlen(int k) const { return roots_[k].is_long() ? max_sqlen_ : 1; }

  // Twice the invariant form in the normalization above; always integral.
  int form2(const RootCoeffs& a, const RootCoeffs& b) const;

  Weight omega_of(const RootCoeffs& alpha) const;
  Weight simple_root_weight(int i) const { return roots_[i].omega; }
  Weight rho() const;
  Weight zero_weight() const { return Weight(rank_); }

  // <mu, beta^vee> for beta = roots()[k].
  int pairing(const Weight& mu, int k) const;
  // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i, in omega coordinates.
  Weight reflect(int i, const Weight& mu) const;

  std::vector<int> co_minuscule_roots() const;
  std::vector<int> minuscule_weights() const;
  int dual_coxeter_number() const;
  std::uint64_t weyl_group_order() const;

 private:
  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sqlen_;
  int max_sqlen_ = 1;
  bool simply_laced_ = true;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  int highest_ = 0;
  std::optional<int> highest_short_;
  std::unordered_map<RootCoeffs, int, LatticeHash> by_alpha_;
  std::unordered_map<Weight, int, LatticeHash> by_omega_;
};

bool is_valid_type(char type, int rank);
RootSystem build_root_system(char type, int rank);

}  // namespace liecheck
