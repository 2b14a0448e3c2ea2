#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecheck/character.hpp"
#include "liecheck/linalg.hpp"
#include "liecheck/rootsys.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

// Sparse vector over the Chevalley basis: indices 0..|R|-1 are x_beta for
// roots()[k], then |R| + i is h_i = alpha_i^vee.
using SparseVec = std::map<int, long long>;

class LieAlgebra {
 public:
  // Structure constants by the extraspecial-pair method; Jacobi is checked
  // exhaustively for rank <= 4 and on `jacobi_samples` random triples above.
  explicit LieAlgebra(const RootSystem& rs, int jacobi_samples = 10000, std::uint64_t seed = 1);

  const RootSystem& system() const { return *rs_; }
  int dim() const { return rs_->num_roots() + rs_->rank(); }
  int cartan_index(int i) const { return rs_->num_roots() + i; }

  // N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}; zero unless a+b is a root.
  int N(int a, int b) const { return n_[idx(a, b)]; }
  // index of beta_a + beta_b if a root, else -1
  int sum_index(int a, int b) const { return sum_[idx(a, b)]; }

  SparseVec bracket_basis(int a, int b) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  // Number of basis triples checked and the first failure, if any.
  struct JacobiStats {
    std::uint64_t triples = 0;
    bool ok = true;
    std::string failure;
  };
  JacobiStats check_jacobi_exhaustive() const;
  JacobiStats check_jacobi_sampled(int samples, std::uint64_t seed) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * rs_->num_roots() + b; }
  bool jacobi_triple(int a, int b, int c, std::string* why) const;

  const RootSystem* rs_;
  std::vector<int> n_;
  std::vector<int> sum_;
};

// A T-stable subspace of g. Slot k < |R| is the root line of roots()[k]
// (ambient dimension 1); slot |R| is the Cartan subalgebra (ambient dimension
// rank). Each component is a full-column-rank basis in ambient coordinates.
class TSubspace {
 public:
  static TSubspace zero(const LieAlgebra& lie);
  static TSubspace full(const LieAlgebra& lie);
  static TSubspace borel(const LieAlgebra& lie);
  static TSubspace parabolic(const LieAlgebra& lie, ParabolicSubset J);

  const LieAlgebra& lie() const { return *lie_; }
  int num_slots() const { return static_cast<int>(comps_.size()); }
  int cartan_slot() const { return num_slots() - 1; }
  int ambient_dim(int slot) const { return slot == cartan_slot() ? lie_->system().rank() : 1; }
  Weight slot_weight(int slot) const;
  // slot holding weight mu, or -1 if mu is neither a root nor zero
  int slot_of(const Weight& mu) const;

  const Matrix& slot(int s) const { return comps_[s]; }
  // Basis matrix of the weight-mu component (empty matrix if absent).
  Matrix component(const Weight& mu) const;
  int slot_dim(int s) const { return comps_[s].cols(); }
  int dim() const;
  CharacterPoly character() const;

  bool contains(const TSubspace& o) const;
  friend bool operator==(const TSubspace& a, const TSubspace& b);

  void set_slot(int s, Matrix basis);  // basis is reduced to full column rank

 private:
  explicit TSubspace(const LieAlgebra& lie);
  const LieAlgebra* lie_;
  std::vector<Matrix> comps_;
};

// Block of ad(x_g) from slot s to the slot of weight(s)+weight(g). Returns
// the target slot, or -1 if the block is zero.
int ad_block(const LieAlgebra& lie, int g, int s, Matrix* block);

bool is_b_stable(const TSubspace& M, std::string* why = nullptr);

// Largest subspace of M stable under ad(b) and ad(x_{alpha_i}).
TSubspace largest_pstable_subspace(const TSubspace& M, int i);

struct SlString {
  Weight top;
  int length = 0;
  int multiplicity = 0;
  int c = 0;  // <top, alpha_i^vee> - (length - 1)
};

struct StringDecomp {
  int alpha = 0;
  std::vector<SlString> strings;
  int dimension() const;
  CharacterPoly character(const RootSystem& rs) const;
};

// Graded Jordan type of ad(x_{-alpha_i}) on M.
StringDecomp string_decomposition(const TSubspace& M, int i);

// Strings of one sl2 direction contribute to H^0 (c = 0) or H^1 (c <= -2).
CharacterPoly string_rule_h0(const RootSystem& rs, const StringDecomp& sd);
CharacterPoly string_rule_h1(const RootSystem& rs, const StringDecomp& sd);

}  // namespace liecheck
