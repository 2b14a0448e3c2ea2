#include "liecheck/cohomology.hpp"

#include <functional>
#include <map>

namespace liecheck {

std::vector<int> CohomChainResult::dims() const {
  std::vector<int> d;
  for (const auto& m : step_h0) d.push_back(m.dim());
  return d;
}

CohomChainResult h0_chain(const Word& word, const TSubspace& M) {
  const RootSystem& rs = M.lie().system();
  if (!is_reduced(rs, word)) throw NotReduced(word_to_string(word) + " is not reduced");
  CohomChainResult r;
  r.word = word;
  r.step_h0.push_back(M);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const TSubspace& cur = r.step_h0.back();
    StringDecomp sd = string_decomposition(cur, *it);
    CharacterPoly predicted = string_rule_h0(rs, sd);
    TSubspace next = largest_pstable_subspace(cur, *it);
    if (!(predicted == next.character()))
      throw InternalError("string rule disagrees with the stable subspace at s" + std::to_string(*it + 1));
    CharacterPoly h1 = string_rule_h1(rs, sd);
    if (!h1.is_zero() && r.all_vanish) {
      r.all_vanish = false;
      r.inconclusive_step = static_cast<int>(r.step_h1.size()) + 1;
    }
    r.step_strings.push_back(std::move(sd));
    r.step_h1.push_back(std::move(h1));
    r.step_h0.push_back(std::move(next));
  }
  return r;
}

H1Certificate h1_certificate(const Word& word, const TSubspace& M) {
  CohomChainResult r = h0_chain(word, M);
  H1Certificate c;
  c.vanishes = r.all_vanish;
  if (!c.vanishes) {
    c.step = r.inconclusive_step;
    c.character = r.step_h1[c.step - 1];
  }
  return c;
}

CharacterPoly demazure_operator(const RootSystem& rs, int i, const CharacterPoly& f) {
  const Weight a = rs.simple_root_weight(i);
  CharacterPoly num = f - f.reflected(rs, i).shifted(-a);
  // Group by alpha_i-coset: mu = rep + level * alpha, level = floor(mu_i / 2).
  auto floordiv2 = [](int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
  std::map<Weight, std::map<int, long long>> cosets;
  for (const auto& [mu, m] : num.terms()) {
    int lvl = floordiv2(mu[i]);
    cosets[mu - lvl * a][lvl] += m;
  }
  CharacterPoly q;
  for (const auto& [rep, levels] : cosets) {
    long long run = 0;
    int top = levels.rbegin()->first, bottom = levels.begin()->first;
    for (int l = top; l >= bottom; --l) {
      auto it = levels.find(l);
      if (it != levels.end()) run += it->second;
      q.add(rep + l * a, run);
    }
    if (run != 0) throw InternalError("Demazure numerator not divisible by (1 - e^{-alpha})");
  }
  return q;
}

CharacterPoly demazure_word(const RootSystem& rs, const Word& word, const CharacterPoly& f) {
  CharacterPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure_operator(rs, *it, g);
  return g;
}

std::optional<bool> euler_crosscheck(const Word& word, const TSubspace& M) {
  CohomChainResult r = h0_chain(word, M);
  if (!r.all_vanish) return std::nullopt;
  return demazure_word(M.lie().system(), word, M.character()) == r.final_h0().character();
}

bool line_bundle_vanishes(const WeylElement& w, const Weight& lambda) {
  for (int s = 0; s < w.system().rank(); ++s)
    if (w.is_right_descent(s) && lambda[s] == -1) return true;
  return false;
}

std::string ParabolicVanishing::summary() const {
  std::string s = "H0 dim " + std::to_string(direct.final_h0().dim()) + ", H1 " + (h1_vanishes ? "vanishes" : "inconclusive");
  if (les_applicable)
    s += std::string("; exact-sequence route: b ") + (les_borel_vanishes ? "vanishes" : "inconclusive") +
         ", line " + (les_line_vanishes ? "vanishes" : "inconclusive");
  if (derived_quotient_dim) s += "; H0(w, g/p) = g (dim " + std::to_string(*derived_quotient_dim) + ")";
  return s;
}

ParabolicVanishing parabolic_vanishing(const LieAlgebra& lie, const Word& word, ParabolicSubset J) {
  const RootSystem& rs = lie.system();
  ParabolicVanishing pv;
  pv.word = word;
  pv.J = J;
  pv.direct = h0_chain(word, TSubspace::parabolic(lie, J));
  pv.h0_zero = pv.direct.final_h0().dim() == 0;
  pv.h1_vanishes = pv.direct.all_vanish;
  pv.euler = euler_crosscheck(word, TSubspace::parabolic(lie, J));
  if (J.size() == 1) {
    int d = J.indices().front();
    pv.les_applicable = true;
    CohomChainResult b = h0_chain(word, TSubspace::borel(lie));
    pv.les_borel_vanishes = b.all_vanish && b.final_h0().dim() == 0;
    pv.les_line_vanishes = line_bundle_vanishes(WeylElement::from_word(rs, word), rs.simple_root_weight(d));
  }
  if (pv.vanishes() || (pv.les_applicable && pv.les_borel_vanishes && pv.les_line_vanishes))
    pv.derived_quotient_dim = lie.dim();
  return pv;
}

std::optional<Word> search_vanishing_word(const WeylElement& w, const TSubspace& M, std::uint64_t budget) {
  std::uint64_t used = 0;
  Word suffix;  // letters consumed so far, in consumption order
  std::function<bool(const WeylElement&, const TSubspace&)> dfs = [&](const WeylElement& u, const TSubspace& cur) {
    if (u.is_identity()) return true;
    for (int s = 0; s < u.system().rank(); ++s) {
      if (!u.is_right_descent(s)) continue;
      if (++used > budget) throw BudgetExceeded("reduced-word search exceeded budget");
      StringDecomp sd = string_decomposition(cur, s);
      if (!string_rule_h1(u.system(), sd).is_zero()) continue;
      suffix.push_back(s);
      if (dfs(u.right_mul(s), largest_pstable_subspace(cur, s))) return true;
      suffix.pop_back();
    }
    return false;
  };
  if (!dfs(w, M)) return std::nullopt;
  return Word(suffix.rbegin(), suffix.rend());
}

}  // namespace liecheck
