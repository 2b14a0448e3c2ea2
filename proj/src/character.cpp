#include "liecheck/character.hpp"

#include "liecheck/linalg.hpp"

namespace liecheck {

CharacterPoly CharacterPoly::monomial(const Weight& mu, long long m) {
  CharacterPoly f;
  f.add(mu, m);
  return f;
}

void CharacterPoly::add(const Weight& mu, long long m) {
  if (m == 0) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, m);
    return;
  }
  it->second += m;
  if (it->second == 0) terms_.erase(it);
}

long long CharacterPoly::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

long long CharacterPoly::total() const {
  long long s = 0;
  for (const auto& [w, m] : terms_) s += m;
  return s;
}

bool CharacterPoly::nonnegative() const {
  for (const auto& [w, m] : terms_)
    if (m < 0) return false;
  return true;
}

CharacterPoly& CharacterPoly::operator+=(const CharacterPoly& o) {
  for (const auto& [w, m] : o.terms_) add(w, m);
  return *this;
}

CharacterPoly& CharacterPoly::operator-=(const CharacterPoly& o) {
  for (const auto& [w, m] : o.terms_) add(w, -m);
  return *this;
}

CharacterPoly CharacterPoly::shifted(const Weight& mu) const {
  CharacterPoly f;
  for (const auto& [w, m] : terms_) f.add(w + mu, m);
  return f;
}

CharacterPoly CharacterPoly::reflected(const RootSystem& rs, int i) const {
  CharacterPoly f;
  for (const auto& [w, m] : terms_) f.add(rs.reflect(i, w), m);
  return f;
}

bool weight_to_alpha(const RootSystem& rs, const Weight& mu, RootCoeffs* out) {
  const int n = rs.rank();
  if (auto k = rs.index_of_weight(mu)) {
    *out = rs.root(*k).alpha;
    return true;
  }
  if (mu.is_zero()) {
    *out = RootCoeffs(n);
    return true;
  }
  Matrix a(n, n), b(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rs.cartan(i, j);
    b(i, 0) = mu[i];
  }
  Matrix x = solve(a, b);
  RootCoeffs r(n);
  for (int i = 0; i < n; ++i) {
    if (denominator(x(i, 0)) != 1) return false;
    r[i] = static_cast<int>(numerator(x(i, 0)));
  }
  *out = r;
  return true;
}

std::string CharacterPoly::to_string(const RootSystem& rs) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // highest weights first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, m] = *it;
    if (!first) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    first = false;
    long long am = m < 0 ? -m : m;
    if (am != 1) s += std::to_string(am);
    RootCoeffs a;
    if (w.is_zero()) s += "e^0";
    else if (weight_to_alpha(rs, w, &a)) s += "e^a" + a.to_string();
    else s += "e^w" + w.to_string();
  }
  return s;
}

}  // namespace liecheck
