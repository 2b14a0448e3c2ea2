#include "liecheck/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace liecheck {

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i + 1);
  return s;
}

WeylElement::WeylElement(const RootSystem& rs) : WeylElement(rs, rs.rho()) {}

WeylElement::WeylElement(const RootSystem& rs, Weight rho_image) : rs_(&rs), rho_image_(rho_image) {
  extract_word();
  Weight mu = rs.rho();
  for (int i : word_) mu = rs.reflect(i, mu);
  inv_rho_ = mu;
}

void WeylElement::extract_word() {
  word_.clear();
  Weight mu = rho_image_;
  for (;;) {
    int i = 0;
    while (i < rs_->rank() && mu[i] >= 0) ++i;
    if (i == rs_->rank()) break;
    word_.push_back(i);
    mu = rs_->reflect(i, mu);
  }
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  Weight mu = rs.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rs.rank()) throw ConfigError("letter out of range in word");
    mu = rs.reflect(*it, mu);
  }
  return WeylElement(rs, mu);
}

Weight WeylElement::act(const Weight& mu) const {
  Weight r = mu;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = rs_->reflect(*it, r);
  return r;
}

RootCoeffs WeylElement::act_alpha(const RootCoeffs& a) const {
  RootCoeffs r = a;
  const int n = rs_->rank();
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    int i = *it;
    int p = 0;
    for (int j = 0; j < n; ++j) p += rs_->cartan(i, j) * r[j];
    r[i] -= p;
  }
  return r;
}

int WeylElement::act_root(int k) const {
  auto idx = rs_->index_of(act_alpha(rs_->root(k).alpha));
  if (!idx) throw InternalError("Weyl image of a root is not a root");
  return *idx;
}

WeylElement WeylElement::inverse() const { return WeylElement(*rs_, *inv_rho_); }

WeylElement WeylElement::operator*(const WeylElement& o) const { return WeylElement(*rs_, act(o.rho_image_)); }

WeylElement WeylElement::left_mul(int i) const { return WeylElement(*rs_, rs_->reflect(i, rho_image_)); }

WeylElement WeylElement::right_mul(int i) const { return WeylElement(*rs_, act(rs_->reflect(i, rs_->rho()))); }

bool WeylElement::is_right_descent(int i) const { return (*inv_rho_)[i] < 0; }

std::vector<int> WeylElement::inversion_set() const {
  std::vector<int> out;
  for (int k = 0; k < rs_->num_positive(); ++k)
    if (!rs_->root(act_root(k)).positive()) out.push_back(k);
  return out;
}

WeylElement canonicalize(const RootSystem& rs, const Word& word) { return WeylElement::from_word(rs, word); }

bool is_reduced(const RootSystem& rs, const Word& word) {
  return WeylElement::from_word(rs, word).length() == static_cast<int>(word.size());
}

ParabolicSubset ParabolicSubset::from_indices(const std::vector<int>& idx) {
  ParabolicSubset p;
  for (int i : idx) p.mask_ |= 1u << i;
  return p;
}

std::vector<int> ParabolicSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string ParabolicSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

WeylElement longest_element(const RootSystem& rs, ParabolicSubset J) {
  WeylElement w(rs);
  for (;;) {
    int next = -1;
    for (int j : J.indices())
      if (!w.is_right_descent(j)) {
        next = j;
        break;
      }
    if (next < 0) return w;
    w = w.right_mul(next);
  }
}

WeylElement min_coset_rep(const WeylElement& w, ParabolicSubset J) {
  WeylElement u = w;
  for (;;) {
    int next = -1;
    for (int j : J.indices())
      if (u.is_right_descent(j)) {
        next = j;
        break;
      }
    if (next < 0) return u;
    u = u.right_mul(next);
  }
}

bool in_min_coset_reps(const WeylElement& w, ParabolicSubset J) {
  for (int j : J.indices())
    if (w.is_right_descent(j)) return false;
  return true;
}

bool BruhatOracle::leq(const WeylElement& u, const WeylElement& w) {
  if (u.length() > w.length()) return false;
  if (w.is_identity()) return u.is_identity();
  if (u.length() == w.length()) return u == w;
  if (u.is_identity()) return true;
  auto key = std::make_pair(u.rho_image(), w.rho_image());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  int s = w.word().front();
  WeylElement sw = w.left_mul(s);
  bool r = u.is_left_descent(s) ? leq(u.left_mul(s), sw) : leq(u, sw);
  memo_.emplace(key, r);
  return r;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  BruhatOracle o;
  return o.leq(u, w);
}

Translators find_v_alpha(const RootSystem& rs, int i, std::uint64_t budget) {
  if (i < 0 || i >= rs.rank()) throw ConfigError("simple root index out of range");
  if (!rs.simple_is_long(i))
    throw ShortRoot("alpha_" + std::to_string(i + 1) + " is short; no element maps alpha_0 to it");
  const Weight a0 = rs.highest_root().omega;
  const Weight plus = rs.simple_root_weight(i);
  const Weight minus = -plus;

  // BFS over y = w^{-1}, tracking y(alpha_0).
  struct Node {
    Weight rho_img;
    Weight a0_img;
  };
  std::vector<Node> level{{rs.rho(), a0}};
  std::unordered_set<Weight, LatticeHash> seen{rs.rho()};
  std::optional<WeylElement> u, v;
  std::uint64_t visited = 1;
  while (!level.empty() && !(u && v)) {
    int nu = 0, nv = 0;
    std::optional<Weight> cu, cv;
    for (const auto& n : level) {
      if (!u && n.a0_img == plus) { ++nu; cu = n.rho_img; }
      if (!v && n.a0_img == minus) { ++nv; cv = n.rho_img; }
    }
    if (nu > 1 || nv > 1)
      throw DuplicateMinimal("several minimal solutions for alpha_" + std::to_string(i + 1));
    auto make = [&](const Weight& r) { return WeylElement::from_rho_image(rs, r).inverse(); };
    if (cu) u = make(*cu);
    if (cv) v = make(*cv);
    if (u && v) break;
    std::vector<Node> nxt;
    for (const auto& n : level) {
      for (int j = 0; j < rs.rank(); ++j) {
        if (n.rho_img[j] < 0) continue;  // s_j y would be shorter
        Weight r = rs.reflect(j, n.rho_img);
        if (!seen.insert(r).second) continue;
        if (++visited > budget) throw BudgetExceeded("translator search exceeded budget");
        nxt.push_back({r, rs.reflect(j, n.a0_img)});
      }
    }
    level.swap(nxt);
  }
  if (!u || !v) throw InternalError("translator search exhausted the group");
  return Translators{*u, *v, rs.dual_coxeter_number()};
}

std::vector<int> diagram_automorphism(const RootSystem& rs, ParabolicSubset J) {
  std::vector<int> tau(rs.rank(), -1);
  WeylElement w0 = longest_element(rs, J);
  for (int j : J.indices()) {
    RootCoeffs img = -w0.act_alpha(RootCoeffs::unit(rs.rank(), j));
    for (int t = 0; t < rs.rank(); ++t)
      if (img == RootCoeffs::unit(rs.rank(), t)) tau[j] = t;
    if (tau[j] < 0 || !J.contains(tau[j])) throw InternalError("-w_0J does not permute J");
  }
  return tau;
}

CosetEnumerator::CosetEnumerator(const RootSystem& rs, ParabolicSubset J, std::uint64_t budget)
    : rs_(&rs), J_(J) {
  if (rs.weyl_group_order() > budget)
    throw BudgetExceeded("|W(" + rs.label() + ")| = " + std::to_string(rs.weyl_group_order()) +
                         " exceeds budget " + std::to_string(budget));
  level_.push_back(WeylElement(rs));
}

void CosetEnumerator::advance_level() {
  std::vector<WeylElement> nxt;
  std::unordered_set<Weight, LatticeHash> seen;
  for (const auto& w : level_) {
    for (int s = 0; s < rs_->rank(); ++s) {
      if (w.is_left_descent(s)) continue;
      WeylElement sw = w.left_mul(s);
      if (!in_min_coset_reps(sw, J_)) continue;
      if (seen.insert(sw.rho_image()).second) nxt.push_back(sw);
    }
  }
  level_.swap(nxt);
  pos_ = 0;
}

std::optional<WeylElement> CosetEnumerator::next() {
  if (pos_ == level_.size()) {
    if (level_.empty()) return std::nullopt;
    advance_level();
    if (level_.empty()) return std::nullopt;
  }
  return level_[pos_++];
}

std::vector<WeylElement> enumerate_WJ(const RootSystem& rs, ParabolicSubset J, std::uint64_t budget) {
  CosetEnumerator e(rs, J, budget);
  std::vector<WeylElement> out;
  while (auto w = e.next()) out.push_back(*w);
  return out;
}

}  // namespace liecheck
