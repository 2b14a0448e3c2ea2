#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

namespace liecheck {

inline constexpr int kMaxRank = 8;

// Fixed-capacity integer vector of length `rank`; the Tag keeps weights
// (fundamental-weight coordinates) and root coefficients (simple-root
// coordinates) from being mixed up.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(int rank) : rank_(rank) { assert(rank >= 0 && rank <= kMaxRank); }
  LatticeVec(std::initializer_list<int> coords) : rank_(static_cast<int>(coords.size())) {
    assert(rank_ <= kMaxRank);
    int i = 0;
    for (int c : coords) c_[i++] = c;
  }

  static LatticeVec unit(int rank, int i) {
    LatticeVec v(rank);
    v.c_[i] = 1;
    return v;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  int sum() const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += c_[i];
    return s;
  }
  bool all_nonnegative() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] < 0) return false;
    return true;
  }
  bool all_nonpositive() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] > 0) return false;
    return true;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    assert(rank_ == o.rank_);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    assert(rank_ == o.rank_);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }
  friend LatticeVec operator*(int k, LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i]));
    return h;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  // rank_ first so that the defaulted ordering compares ranks before entries.
  int rank_ = 0;
  std::array<int, kMaxRank> c_{};
};

struct WeightTag {};
struct RootCoeffTag {};

/// Vector in the fundamental-weight basis: entry i equals the pairing with
/// the i-th simple coroot.
using Weight = LatticeVec<WeightTag>;
/// Coefficients over the simple roots (or simple coroots).
using RootCoeffs = LatticeVec<RootCoeffTag>;

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVec<Tag>& v) const {
    return v.hash();
  }
};

}  // namespace liecheck
