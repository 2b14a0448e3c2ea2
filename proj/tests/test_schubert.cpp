#include <random>

#include "doctest.h"
#include "liecheck/errors.hpp"
#include "liecheck/schubert.hpp"
#include "oracles.hpp"

using namespace liecheck;

namespace {

// For w in W^Q: s_i w W_Q <= w W_Q iff w^{-1}(alpha_i) is negative or lies in the root span of Q.
ParabolicSubset stabilizer_by_roots(const WeylElement& w, ParabolicSubset Q) {
  const int n = w.system().rank();
  std::uint32_t m = 0;
  for (int i = 0; i < n; ++i) {
    RootCoeffs img = w.inverse().act_alpha(RootCoeffs::unit(n, i));
    bool in_Q = true;
    for (int j = 0; j < n; ++j)
      if (!Q.contains(j) && img[j] != 0) in_Q = false;
    if (img.all_nonpositive() || in_Q) m |= 1u << i;
  }
  return ParabolicSubset(m);
}

}  // namespace

TEST_SUITE("schubert") {
  TEST_CASE("stabilizer parabolic agrees with the root criterion") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'D', 4}}) {
      RootSystem rs(t, n);
      BruhatOracle o;
      for (std::uint32_t m = 1; m < (1u << n); ++m) {
        ParabolicSubset Q(m);
        for (const auto& w : enumerate_WJ(rs, Q)) {
          StabilizerResult st = stabilizer_parabolic(SchubertClass{w, Q}, &o);
          CHECK(st.J_stab == stabilizer_by_roots(w, Q));
          // the sign set is always inside the stabilizer
          CHECK((st.sign_set.mask() & ~st.J_stab.mask()) == 0u);
        }
      }
    }
  }

  TEST_CASE("translator classes") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 3}, {'C', 4},
                                                         {'C', 5}, {'F', 4}, {'G', 2}}) {
      RootSystem rs(t, n);
      LieAlgebra lie(rs);
      ClassConstruction cc = construct_translator_classes(rs);
      CHECK(static_cast<int>(cc.classes.size()) == (t == 'B' ? n - 1 : t == 'C' ? n - 1 : n));
      const WeylElement v = WeylElement::from_word(rs, cc.v_word);
      CHECK(v.inverse().act_alpha(rs.highest_root().alpha) == -RootCoeffs::unit(n, cc.v_root));
      CHECK(WeylElement::from_word(rs, cc.chain_word) == v);
      for (const auto& tc : cc.classes) {
        CAPTURE(rs.label());
        CAPTURE(tc.i);
        CHECK(is_reduced(rs, tc.word));
        CHECK(WeylElement::from_word(rs, tc.word) == tc.sc.w);
        CHECK(stabilizer_by_roots(tc.sc.w, tc.sc.Q) == ParabolicSubset{tc.i});
        CaseReport rep = verify_noncominuscule_case(lie, cc, tc);
        CHECK(rep.checks.size() == 7);
        for (const auto& k : rep.checks) {
          CAPTURE(k.name);
          CAPTURE(k.witness);
          CHECK(k.pass);
        }
        CHECK(rep.overall());
      }
    }
    CHECK_THROWS_AS(construct_translator_classes(RootSystem('A', 3)), UnsupportedType);
    CHECK_THROWS_AS(construct_translator_classes(RootSystem('E', 6)), UnsupportedType);
  }

  TEST_CASE("co-minuscule scans") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}}) {
      RootSystem rs(t, n);
      for (int r : rs.co_minuscule_roots()) {
        CaseReport rep = cominuscule_scan(rs, r);
        CHECK(rep.checks.size() == 3);
        CHECK(rep.overall());
      }
    }
    RootSystem b3('B', 3);
    CHECK_THROWS_AS(cominuscule_scan(b3, 1), ConfigError);
    CHECK_THROWS_AS(cominuscule_scan(b3, 0, 10), BudgetExceeded);
  }

  TEST_CASE("a non-co-minuscule root does attain the forbidden pattern") {
    // the construction in G2 for i = 2 gives stabilizer {2} with w^{-1}(a0) < 0
    RootSystem rs('G', 2);
    ClassConstruction cc = construct_translator_classes(rs);
    const auto& tc = cc.classes.back();
    CHECK(tc.i == 1);
    CHECK(stabilizer_parabolic(tc.sc).J_stab == ParabolicSubset{1});
    CHECK(tc.sc.w.inverse().act_alpha(rs.highest_root().alpha).all_nonpositive());
  }

  TEST_CASE("classification report") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'F', 4}, {'G', 2}}) {
      RootSystem rs(t, n);
      LieAlgebra lie(rs);
      auto reps = classification_report(lie);
      CHECK_FALSE(reps.empty());
      for (const auto& c : reps) CHECK(c.overall());
    }
  }

  TEST_CASE("formatting helpers") {
    CHECK(alpha_string(RootCoeffs{1, 2, 0}) == "a1+2a2");
    CHECK(alpha_string(RootCoeffs{-1, -1}) == "-(a1+a2)");
    CHECK(alpha_string(RootCoeffs{0, -1}) == "-a2");
    CHECK(alpha_string(RootCoeffs{0, 0}) == "0");
    CHECK(indices_string({0, 2}) == "{1,3}");
    CHECK(indices_string({}) == "{}");
  }
}
