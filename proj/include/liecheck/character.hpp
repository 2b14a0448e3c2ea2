#pragma once

#include <map>
#include <string>

#include "liecheck/rootsys.hpp"

namespace liecheck {

// Finitely supported Z-valued function on the weight lattice; no zero entries.
class CharacterPoly {
 public:
  CharacterPoly() = default;
  static CharacterPoly monomial(const Weight& mu, long long m = 1);

  void add(const Weight& mu, long long m);
  long long coeff(const Weight& mu) const;
  const std::map<Weight, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long total() const;  // sum of multiplicities (dimension for genuine characters)
  bool nonnegative() const;

  CharacterPoly& operator+=(const CharacterPoly& o);
  CharacterPoly& operator-=(const CharacterPoly& o);
  friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) { return a += b; }
  friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) { return a -= b; }
  friend bool operator==(const CharacterPoly&, const CharacterPoly&) = default;

  CharacterPoly shifted(const Weight& mu) const;               // e^mu * f
  CharacterPoly reflected(const RootSystem& rs, int i) const;  // s_i(f)

  // Weights rewritten over simple roots when they lie in the root lattice,
  // e.g. "e^{-(1,1)} + 2e^{0}"; falls back to omega coordinates otherwise.
  std::string to_string(const RootSystem& rs) const;

 private:
  std::map<Weight, long long> terms_;
};

// alpha coordinates of a weight in the root lattice, if it is one.
bool weight_to_alpha(const RootSystem& rs, const Weight& mu, RootCoeffs* out);

}  // namespace liecheck
