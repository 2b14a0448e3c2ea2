#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "liecheck/errors.hpp"
#include "liecheck/weyl.hpp"
#include "oracles.hpp"

using namespace liecheck;

namespace {

const std::vector<std::pair<char, int>> kSmall = {{'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}};

std::vector<WeylElement> all_elements(const RootSystem& rs) { return enumerate_WJ(rs, ParabolicSubset{}); }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("group order matches matrix closure") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
      RootSystem rs(t, n);
      auto elems = all_elements(rs);
      CHECK(elems.size() == oracle::group(rs).size());
      std::set<oracle::Mat> mats;
      for (const auto& w : elems) mats.insert(oracle::element_matrix(w));
      CHECK(mats.size() == elems.size());
    }
  }

  TEST_CASE("words, lengths and canonical forms") {
    for (auto [t, n] : kSmall) {
      RootSystem rs(t, n);
      for (const auto& w : all_elements(rs)) {
        const oracle::Mat m = oracle::element_matrix(w);
        CHECK(oracle::word_matrix(rs, w.word()) == m);
        CHECK(w.length() == oracle::length(rs, m));
        CHECK(static_cast<int>(w.inversion_set().size()) == w.length());
        CHECK(is_reduced(rs, w.word()));
        CHECK(WeylElement::from_word(rs, w.word()) == w);
        CHECK(w.word() == oracle::lex_least_word(rs, m));
      }
    }
  }

  TEST_CASE("products, inverses and descents") {
    std::mt19937_64 rng(7);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 4}, {'F', 4}, {'E', 6}, {'D', 5}}) {
      RootSystem rs(t, n);
      for (int trial = 0; trial < 30; ++trial) {
        WeylElement a = oracle::random_element(rs, rng, 12), b = oracle::random_element(rs, rng, 12);
        CHECK(oracle::element_matrix(a * b) == oracle::mul(oracle::element_matrix(a), oracle::element_matrix(b), n));
        CHECK((a * a.inverse()).is_identity());
        CHECK(a.inverse().inverse() == a);
        for (int i = 0; i < n; ++i) {
          CHECK(a.left_mul(i) == WeylElement::reflection(rs, i) * a);
          CHECK(a.right_mul(i) == a * WeylElement::reflection(rs, i));
          CHECK(a.is_left_descent(i) == (a.left_mul(i).length() < a.length()));
          CHECK(a.is_right_descent(i) == (a.right_mul(i).length() < a.length()));
          CHECK(a.is_left_descent(i) == a.inverse().act_alpha(RootCoeffs::unit(n, i)).all_nonpositive());
        }
        Weight mu = rs.rho();
        CHECK((a * b).act(mu) == a.act(b.act(mu)));
        for (int k = 0; k < rs.num_roots(); k += 3)
          CHECK(rs.root(a.act_root(k)).alpha == a.act_alpha(rs.root(k).alpha));
      }
    }
  }

  TEST_CASE("non-reduced words") {
    RootSystem rs('A', 2);
    CHECK_FALSE(is_reduced(rs, {0, 0}));
    CHECK(is_reduced(rs, {0, 1, 0}));
    CHECK_FALSE(is_reduced(rs, {0, 1, 0, 1}));
    CHECK(WeylElement::from_word(rs, {0, 1, 0}) == WeylElement::from_word(rs, {1, 0, 1}));
    CHECK(word_to_string({}) == "e");
    CHECK(word_to_string({1, 0, 1}) == "s2s1s2");
  }

  TEST_CASE("Bruhat order agrees with the subword criterion") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}}) {
      RootSystem rs(t, n);
      auto elems = all_elements(rs);
      BruhatOracle o;
      for (const auto& w : elems)
        for (const auto& u : elems) {
          bool expect = oracle::bruhat_subword(rs, w.word(), oracle::element_matrix(u));
          CHECK(o.leq(u, w) == expect);
        }
    }
    // inversion-set containment is not the Bruhat order
    RootSystem a2('A', 2);
    WeylElement s1 = WeylElement::reflection(a2, 0), s2s1 = WeylElement::from_word(a2, {1, 0});
    CHECK(bruhat_leq(s1, s2s1));
  }

  TEST_CASE("parabolic subgroups and cosets") {
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
      RootSystem rs(t, n);
      const std::uint64_t order = oracle::group(rs).size();
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        ParabolicSubset J(m);
        const std::uint64_t wj = oracle::group(rs, m).size();
        WeylElement w0 = longest_element(rs, J);
        int pos_J = 0;
        for (int k = 0; k < rs.num_positive(); ++k) {
          bool in = true;
          for (int i = 0; i < n; ++i)
            if (!J.contains(i) && rs.root(k).alpha[i] != 0) in = false;
          pos_J += in;
        }
        CHECK(w0.length() == pos_J);
        for (int j : J.indices()) CHECK(w0.is_right_descent(j));
        auto reps = enumerate_WJ(rs, J);
        CHECK(reps.size() * wj == order);
        for (std::size_t k = 1; k < reps.size(); ++k) CHECK(reps[k - 1].length() <= reps[k].length());
        for (const auto& w : reps) {
          CHECK(in_min_coset_reps(w, J));
          for (int j : J.indices()) CHECK_FALSE(w.is_right_descent(j));
        }
        auto tau = diagram_automorphism(rs, J);
        for (int i = 0; i < n; ++i) {
          if (!J.contains(i)) {
            CHECK(tau[i] == -1);
            continue;
          }
          CHECK(w0.act_alpha(RootCoeffs::unit(n, i)) == -RootCoeffs::unit(n, tau[i]));
        }
      }
      // min_coset_rep is the shortest element of wW_J
      std::mt19937_64 rng(3);
      for (int trial = 0; trial < 20; ++trial) {
        WeylElement w = oracle::random_element(rs, rng, 10);
        ParabolicSubset J(static_cast<std::uint32_t>(rng() % (1u << n)));
        WeylElement r = min_coset_rep(w, J);
        CHECK(in_min_coset_reps(r, J));
        WeylElement q = r.inverse() * w;
        for (int i : q.word()) CHECK(J.contains(i));
        CHECK(r.length() + q.length() == w.length());
      }
    }
    RootSystem a3('A', 3);
    auto tau = diagram_automorphism(a3, ParabolicSubset::full(3));
    CHECK(tau == std::vector<int>{2, 1, 0});
    auto tb = diagram_automorphism(RootSystem('B', 3), ParabolicSubset::full(3));
    CHECK(tb == std::vector<int>{0, 1, 2});
  }

  TEST_CASE("enumerator budget") {
    RootSystem e6('E', 6);
    CHECK_THROWS_AS(CosetEnumerator(e6, ParabolicSubset{}, 1000), BudgetExceeded);
    CHECK_NOTHROW(CosetEnumerator(e6, ParabolicSubset{0, 1, 2, 3, 4}, 100000));
  }

  TEST_CASE("translators") {
    const std::vector<std::pair<char, int>> types = {{'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
                                                     {'B', 5}, {'C', 3}, {'C', 4}, {'C', 5}, {'D', 4}, {'F', 4},
                                                     {'G', 2}};
    for (auto [t, n] : types) {
      RootSystem rs(t, n);
      const RootCoeffs a0 = rs.highest_root().alpha;
      const int g = rs.dual_coxeter_number();
      for (int i = 0; i < n; ++i) {
        CAPTURE(rs.label());
        CAPTURE(i);
        if (!rs.simple_is_long(i)) {
          CHECK_THROWS_AS(find_v_alpha(rs, i), ShortRoot);
          continue;
        }
        Translators tr = find_v_alpha(rs, i);
        const RootCoeffs ai = RootCoeffs::unit(n, i);
        CHECK(tr.dual_coxeter == g);
        CHECK(tr.u.length() == g - 2);
        CHECK(tr.v.length() == g - 1);
        CHECK(tr.u.inverse().act_alpha(a0) == ai);
        CHECK(tr.v.inverse().act_alpha(a0) == -ai);
        CHECK(tr.v == tr.u * WeylElement::reflection(rs, i));
        // minimality and uniqueness by exhaustive search over W
        int shorter = 0, same = 0;
        for (const auto& w : enumerate_WJ(rs, ParabolicSubset{})) {
          if (w.inverse().act_alpha(a0) != -ai) continue;
          if (w.length() < tr.v.length()) ++shorter;
          if (w.length() == tr.v.length()) ++same;
        }
        CHECK(shorter == 0);
        CHECK(same == 1);
      }
    }
    CHECK_THROWS_AS(find_v_alpha(RootSystem('F', 4), 1, 5), BudgetExceeded);
  }

  TEST_CASE("parabolic subset helpers") {
    ParabolicSubset J{0, 2};
    CHECK(J.to_string() == "{1,3}");
    CHECK(J.size() == 2);
    CHECK(J.complement(4) == ParabolicSubset{1, 3});
    CHECK(J.without(2) == ParabolicSubset{0});
    CHECK(ParabolicSubset::from_indices({2, 0}) == J);
    CHECK(ParabolicSubset::full(3).indices() == std::vector<int>{0, 1, 2});
  }
}
