#include "liecheck/schubert.hpp"

#include <algorithm>
#include <unordered_set>

namespace liecheck {

bool CaseReport::overall() const {
  for (const auto& c : checks)
    if (!c.skipped && !c.pass) return false;
  return true;
}

Check& CaseReport::add(std::string topic, std::string name, std::string anchor, bool pass, std::string witness) {
  checks.push_back(Check{std::move(topic), std::move(name), std::move(anchor), pass, false, std::move(witness)});
  return checks.back();
}

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& c : cases)
    for (const auto& k : c.checks) n += (!k.skipped && k.pass);
  return n;
}

int VerificationReport::failed() const {
  int n = 0;
  for (const auto& c : cases)
    for (const auto& k : c.checks) n += (!k.skipped && !k.pass);
  return n;
}

int VerificationReport::skipped() const {
  int n = 0;
  for (const auto& c : cases)
    for (const auto& k : c.checks) n += k.skipped;
  return n;
}

std::string alpha_string(const RootCoeffs& a) {
  if (a.is_zero()) return "0";
  bool neg = a.all_nonpositive();
  RootCoeffs b = neg ? -a : a;
  std::string s;
  int terms = 0;
  for (int i = 0; i < b.rank(); ++i) {
    if (b[i] == 0) continue;
    if (!s.empty()) s += b[i] > 0 ? "+" : "-";
    else if (b[i] < 0) s += "-";
    int m = b[i] < 0 ? -b[i] : b[i];
    if (m != 1) s += std::to_string(m);
    s += "a" + std::to_string(i + 1);
    ++terms;
  }
  if (neg) return terms > 1 ? "-(" + s + ")" : "-" + s;
  return s;
}

std::string indices_string(const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s + "}";
}

StabilizerResult stabilizer_parabolic(const SchubertClass& sc, BruhatOracle* oracle) {
  BruhatOracle local;
  BruhatOracle& o = oracle ? *oracle : local;
  const int n = sc.w.system().rank();
  StabilizerResult r;
  std::uint32_t js = 0, ss = 0;
  for (int i = 0; i < n; ++i) {
    if (sc.w.is_left_descent(i)) ss |= 1u << i;
    if (o.leq(min_coset_rep(sc.w.left_mul(i), sc.Q), sc.w)) js |= 1u << i;
  }
  r.J_stab = ParabolicSubset(js);
  r.sign_set = ParabolicSubset(ss);
  return r;
}

namespace {

Word range_word(int from, int to) {  // 0-based inclusive, ascending
  Word w;
  for (int i = from; i <= to; ++i) w.push_back(i);
  return w;
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ClassConstruction construct_translator_classes(const RootSystem& rs) {
  const int n = rs.rank();
  ClassConstruction cc;
  std::vector<int> range;
  switch (rs.type()) {
    case 'B':
      cc.r = 1;
      cc.v_root = n - 2;
      cc.d = n - 1;
      // (s2 ... sn)(s1 ... s_{n-1})
      cc.v_word = cat(range_word(1, n - 1), range_word(0, n - 2));
      // (s2 s1 s3 ... s_{n-1})(s2 s3 ... s_{n-2} s_n s_{n-1})
      if (n == 2) {
        cc.chain_word = {1, 0};
      } else {
        Word a{1, 0};
        for (int k = 2; k <= n - 2; ++k) a.push_back(k);
        Word b = range_word(1, n - 3);
        b.push_back(n - 1);
        b.push_back(n - 2);
        cc.chain_word = cat(a, b);
      }
      for (int i = 1; i < n; ++i) range.push_back(i);
      break;
    case 'C':
      cc.r = 0;
      cc.v_root = n - 1;
      cc.d = n - 2;
      cc.v_word = range_word(0, n - 1);
      cc.chain_word = cc.v_word;
      for (int i = 0; i < n - 1; ++i) range.push_back(i);
      break;
    case 'F':
      cc.r = 0;
      cc.v_root = 1;
      cc.d = 2;
      cc.v_word = {0, 1, 2, 1, 3, 2, 0, 1};
      cc.chain_word = cc.v_word;
      range = {0, 1, 2, 3};
      break;
    case 'G':
      cc.r = 1;
      cc.v_root = 1;
      cc.d = 0;
      cc.v_word = {1, 0, 1};
      cc.chain_word = cc.v_word;
      range = {0, 1};
      break;
    default:
      throw UnsupportedType(rs.label() + " has no translator construction (simply laced)");
  }
  const ParabolicSubset S = ParabolicSubset::full(n);
  const WeylElement v = WeylElement::from_word(rs, cc.v_word);
  const WeylElement w0r = longest_element(rs, S.without(cc.r));
  for (int i : range) {
    WeylElement x = longest_element(rs, S.without(cc.r).without(i)) * w0r;
    WeylElement w = x * v;
    cc.classes.push_back(TranslatorClass{i, x, v, SchubertClass{w, ParabolicSubset{cc.d}}, cat(x.word(), cc.chain_word)});
  }
  return cc;
}

CaseReport verify_noncominuscule_case(const LieAlgebra& lie, const ClassConstruction& cc, const TranslatorClass& tc) {
  const RootSystem& rs = lie.system();
  const int n = rs.rank();
  const std::string T = "constructions";
  const std::string wi = "w" + std::to_string(tc.i + 1);
  const std::string Qs = tc.sc.Q.to_string();
  CaseReport rep;
  rep.id = rs.label() + "/construction/i=" + std::to_string(tc.i + 1);
  const WeylElement& w = tc.sc.w;
  const WeylElement winv = w.inverse();

  rep.add(T, "length additivity", "l(" + wi + ") = l(x) + l(v)", w.length() == tc.x.length() + tc.v.length(),
          wi + " = " + w.to_string() + ", x = " + tc.x.to_string() + ", l = " + std::to_string(w.length()) + " = " +
              std::to_string(tc.x.length()) + " + " + std::to_string(tc.v.length()));
  rep.add(T, "minimal coset representative", wi + " in W^Q for Q = " + Qs, in_min_coset_reps(w, tc.sc.Q),
          wi + "(a" + std::to_string(cc.d + 1) + ") = " + alpha_string(w.act_alpha(RootCoeffs::unit(n, cc.d))));

  {
    RootCoeffs img = w.act_alpha(RootCoeffs::unit(n, cc.d));
    auto k = rs.index_of(img);
    bool ok = k && rs.root(*k).positive() && rs.root(*k).height > 1;
    rep.add(T, "image of alpha_d", wi + "(a" + std::to_string(cc.d + 1) + ") is a non-simple positive root", ok,
            alpha_string(img));
  }
  {
    bool ok = true;
    std::string wit;
    for (int j = 0; j < n; ++j) {
      RootCoeffs img = winv.act_alpha(RootCoeffs::unit(n, j));
      bool neg = img.all_nonpositive();
      if ((j == tc.i) != neg) ok = false;
      wit += (j ? "; " : "") + wi + "^-1(a" + std::to_string(j + 1) + ") = " + alpha_string(img);
    }
    rep.add(T, "sign pattern", wi + "^-1(a_i) < 0 and " + wi + "^-1(a_j) > 0 for j != i", ok, wit);
  }
  {
    StabilizerResult st = stabilizer_parabolic(tc.sc);
    bool ok = st.J_stab == ParabolicSubset{tc.i} && st.sign_set == st.J_stab;
    rep.add(T, "stabilizer", "stabilizer of X_Q(" + wi + ") is P_" + std::to_string(tc.i + 1), ok,
            "Bruhat test " + st.J_stab.to_string() + ", sign test " + st.sign_set.to_string());
  }
  {
    RootCoeffs img = winv.act_alpha(rs.highest_root().alpha);
    rep.add(T, "highest root sent negative", wi + "^-1(a0) < 0", img.all_nonpositive() && !img.is_zero(),
            alpha_string(img));
  }
  {
    std::string conv = rs.type() == 'B' ? " (w_i built from v_{n-1})" : "";
    bool ok = false;
    std::string wit;
    try {
      ParabolicVanishing pv = parabolic_vanishing(lie, tc.word, tc.sc.Q);
      ok = pv.vanishes() && pv.euler.value_or(false);
      wit = "word " + word_to_string(tc.word) + ": " + pv.summary() + ", Euler check " +
            (pv.euler ? (*pv.euler ? "agrees" : "DISAGREES") : "not applicable") + conv +
            "; imported: H^j = 0 for j >= 2 and injectivity of P_i -> Aut^0";
    } catch (const NotReduced& e) {
      wit = e.what();
    }
    rep.add(T, "parabolic vanishing", "H^0(" + wi + ", p_Q) = H^1(" + wi + ", p_Q) = 0", ok, wit);
  }
  return rep;
}

namespace {

std::uint64_t parabolic_order(const RootSystem& rs, ParabolicSubset J) {
  std::unordered_set<Weight, LatticeHash> seen{rs.rho()};
  std::vector<WeylElement> frontier{WeylElement(rs)};
  while (!frontier.empty()) {
    std::vector<WeylElement> nxt;
    for (const auto& w : frontier)
      for (int j : J.indices()) {
        WeylElement u = w.right_mul(j);
        if (seen.insert(u.rho_image()).second) nxt.push_back(u);
      }
    frontier.swap(nxt);
  }
  return seen.size();
}

}  // namespace

CaseReport cominuscule_scan(const RootSystem& rs, int r, std::uint64_t budget) {
  const int n = rs.rank();
  const std::string T = "scans";
  CaseReport rep;
  rep.id = rs.label() + "/scan/r=" + std::to_string(r + 1);
  if (rs.highest_root().alpha[r] != 1)
    throw ConfigError("alpha_" + std::to_string(r + 1) + " is not co-minuscule in " + rs.label());
  if (rs.weyl_group_order() > budget)
    throw BudgetExceeded("|W(" + rs.label() + ")| exceeds budget " + std::to_string(budget));

  const ParabolicSubset S = ParabolicSubset::full(n);
  const ParabolicSubset Srest = S.without(r);
  const RootCoeffs a0 = rs.highest_root().alpha;
  const WeylElement top = min_coset_rep(longest_element(rs, S), Srest);  // w_0^{S\r}
  const WeylElement top_inv = top.inverse();
  const std::vector<int> tau = diagram_automorphism(rs, Srest);
  const std::vector<int> sigma = diagram_automorphism(rs, S);  // identity unless -w_0 acts nontrivially

  std::vector<std::pair<std::uint64_t, ParabolicSubset>> Js;
  for (std::uint32_t m = 1; m < (1u << n); ++m) Js.push_back({parabolic_order(rs, ParabolicSubset(m)), ParabolicSubset(m)});
  std::sort(Js.begin(), Js.end());

  BruhatOracle oracle;
  std::uint64_t pairs = 0, negative = 0, violations = 0, mech_instances = 0, mech_failures = 0;
  std::string first_violation, first_mech_failure;
  for (const auto& [order, J] : Js) {
    CosetEnumerator en(rs, J, budget);
    while (auto w = en.next()) {
      ++pairs;
      WeylElement winv = w->inverse();
      if (!winv.act_alpha(a0).all_nonpositive()) continue;
      ++negative;
      if (in_min_coset_reps(winv, Srest)) {
        ++mech_instances;
        bool fixes = false;
        for (int j : Srest.indices())
          if (J.contains(sigma[tau[j]]) && min_coset_rep(w->left_mul(j), J) == *w) fixes = true;
        if (!(*w == top_inv) || !fixes) {
          ++mech_failures;
          if (first_mech_failure.empty()) first_mech_failure = "J = " + J.to_string() + ", w = " + w->to_string();
        }
      }
      bool other_sign = false;
      for (int i = 0; i < n; ++i)
        if (i != r && w->is_left_descent(i)) other_sign = true;
      if (other_sign) continue;  // stabilizer already contains some i != r
      StabilizerResult st = stabilizer_parabolic(SchubertClass{*w, J}, &oracle);
      if (st.J_stab == ParabolicSubset{r}) {
        ++violations;
        if (first_violation.empty()) first_violation = "J = " + J.to_string() + ", w = " + w->to_string();
      }
    }
  }
  const std::string rs_ = std::to_string(r + 1);
  rep.add(T, "no Schubert class with stabilizer P_r", "no (Q > B, w) has stabilizer {" + rs_ + "} and w^-1(a0) < 0",
          violations == 0,
          std::to_string(Js.size()) + " parabolics, " + std::to_string(pairs) + " classes, " + std::to_string(negative) +
              " with w^-1(a0) < 0" + (violations ? "; first violation " + first_violation : ""));
  rep.add(T, "forcing mechanism",
          "w^-1 in W^{S\\r} and w^-1(a0) < 0 force w = (w_0^{S\\r})^-1, and some s_j with sigma(tau(a_j)) in J fixes wW_J",
          mech_failures == 0,
          std::to_string(mech_instances) + " instances, (w_0^{S\\r})^-1 = " + top_inv.to_string() +
              (mech_failures ? "; first failure " + first_mech_failure : ""));

  // v in W^{S\r}: v(a0) < 0 iff v = w_0^{S\r}
  std::uint64_t bad = 0, count = 0;
  for (const auto& v : enumerate_WJ(rs, Srest, budget)) {
    ++count;
    bool neg = v.act_alpha(a0).all_nonpositive();
    if (neg != (v == top)) ++bad;
  }
  rep.add(T, "co-minuscule coset characterization", "for v in W^{S\\r}: v(a0) < 0 iff v = w_0^{S\\r}", bad == 0,
          std::to_string(count) + " coset representatives, w_0^{S\\r} = " + top.to_string());
  return rep;
}

std::vector<CaseReport> classification_report(const LieAlgebra& lie, std::uint64_t budget) {
  const RootSystem& rs = lie.system();
  std::vector<CaseReport> out;
  std::vector<int> comin = rs.co_minuscule_roots();
  if (rs.simply_laced()) {
    CaseReport c;
    c.id = rs.label() + "/construction";
    Check& k = c.add("constructions", "existence for non-co-minuscule roots",
                     "simply-laced existence direction is imported, not constructed", true, "not constructed");
    k.skipped = true;
    out.push_back(c);
  } else {
    ClassConstruction cc = construct_translator_classes(rs);
    for (const auto& tc : cc.classes) out.push_back(verify_noncominuscule_case(lie, cc, tc));
  }
  if (comin.empty()) {
    CaseReport c;
    c.id = rs.label() + "/scan";
    c.add("scans", "vacuous scan", "no co-minuscule simple roots", true, "co-minuscule set {}");
    out.push_back(c);
  }
  for (int r : comin) out.push_back(cominuscule_scan(rs, r, budget));
  return out;
}

}  // namespace liecheck
