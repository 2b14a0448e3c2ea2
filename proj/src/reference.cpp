#include "liecheck/reference.hpp"

namespace liecheck::reference {

std::optional<std::vector<int>> cominuscule_table(char type, int n) {
  if (!is_valid_type(type, n)) return std::nullopt;
  std::vector<int> all;
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) all.push_back(i);
      return all;
    case 'B': return std::vector<int>{0};
    case 'C': return std::vector<int>{n - 1};
    case 'D': return std::vector<int>{0, n - 2, n - 1};
    case 'E':
      if (n == 6) return std::vector<int>{0, 5};
      if (n == 7) return std::vector<int>{6};
      return std::vector<int>{};
    default: return std::vector<int>{};  // F4, G2
  }
}

std::optional<int> dual_coxeter_table(char type, int n) {
  if (!is_valid_type(type, n)) return std::nullopt;
  switch (type) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 9;
    default: return 4;
  }
}

const std::vector<std::array<int, 4>>& f4_positive_roots() {
  static const std::vector<std::array<int, 4>> t = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},  // 1
      {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1},                // 2
      {1, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 1, 1},                // 3
      {1, 1, 1, 1}, {1, 1, 2, 0}, {0, 1, 2, 1},                // 4
      {1, 1, 2, 1}, {1, 2, 2, 0}, {0, 1, 2, 2},                // 5
      {1, 2, 2, 1}, {1, 1, 2, 2},                              // 6
      {1, 2, 2, 2}, {1, 2, 3, 1},                              // 7
      {1, 2, 3, 2},                                            // 8
      {1, 2, 4, 2},                                            // 9
      {1, 3, 4, 2},                                            // 10
      {2, 3, 4, 2},                                            // 11
  };
  return t;
}

namespace {

struct Builder {
  const RootSystem& rs;
  std::vector<ImageIdentity> out;

  RootCoeffs a(int i) const { return RootCoeffs::unit(rs.rank(), i); }
  RootCoeffs span(int from, int to) const {  // a_from + ... + a_to, 0-based inclusive
    RootCoeffs r(rs.rank());
    for (int k = from; k <= to; ++k) r += a(k);
    return r;
  }
  RootCoeffs coeffs(std::initializer_list<int> c) const {
    RootCoeffs r(rs.rank());
    int i = 0;
    for (int x : c) r += x * a(i++);
    return r;
  }
  void add(const std::string& name, const WeylElement& g, const RootCoeffs& in, const RootCoeffs& expected) {
    out.push_back({name + "(" + alpha_string(in) + ") = " + alpha_string(expected), g, in, expected});
  }
  void add_negative(const std::string& name, const WeylElement& g, const RootCoeffs& in, const std::string& in_name) {
    out.push_back({name + "(" + in_name + ") < 0", g, in, std::nullopt});
  }
};

}  // namespace

std::vector<ImageIdentity> image_identities(const RootSystem& rs, const ClassConstruction& cc) {
  const int n = rs.rank();
  Builder b{rs, {}};
  const WeylElement v = WeylElement::from_word(rs, cc.v_word);
  const WeylElement vi = v.inverse();
  const WeylElement w0r = longest_element(rs, ParabolicSubset::full(n).without(cc.r));
  const RootCoeffs a0 = rs.highest_root().alpha;
  const std::string wr = "w_{0,S\\{" + std::to_string(cc.r + 1) + "}}v";
  b.add("v^-1", vi, a0, -b.a(cc.v_root));
  switch (rs.type()) {
    case 'B':
      if (n == 2) {
        b.add("v^-1", vi, b.a(0), b.coeffs({1, 2}));
        b.add("v^-1", vi, b.a(1), -b.span(0, 1));
      } else {
        b.add("v^-1", vi, b.a(0), b.a(n - 2) + 2 * b.a(n - 1));
        RootCoeffs e = b.span(0, n - 3) + 2 * b.a(n - 2) + 2 * b.a(n - 1);
        b.add("v^-1", vi, b.a(1), -e);
        for (int j = 2; j <= n - 2; ++j) b.add("v^-1", vi, b.a(j), b.a(j - 2));
        b.add("v^-1", vi, b.a(n - 1), b.span(n - 3, n - 1));
      }
      b.add("v", v, b.a(n - 1), b.span(0, n - 1));
      b.add(wr, w0r * v, b.a(n - 1), b.span(1, n - 1));
      break;
    case 'C':
      b.add("v^-1", vi, b.a(0), -b.span(0, n - 1));
      for (int j = 1; j <= n - 2; ++j) b.add("v^-1", vi, b.a(j), b.a(j - 1));
      b.add("v^-1", vi, b.a(n - 1), 2 * b.a(n - 2) + b.a(n - 1));
      b.add("v", v, b.a(n - 2), b.span(0, n - 1));
      b.add(wr, w0r * v, b.a(n - 2), b.span(0, n - 2));
      break;
    case 'F':
      b.add("v^-1", vi, b.a(0), -b.coeffs({1, 3, 4, 2}));
      b.add("v^-1", vi, b.a(1), b.coeffs({0, 1, 2, 0}));
      b.add("v^-1", vi, b.a(2), b.a(3));
      b.add("v^-1", vi, b.a(3), b.coeffs({1, 1, 1, 0}));
      b.add("v", v, b.a(2), b.coeffs({1, 2, 2, 1}));
      b.add(wr, w0r * v, b.a(2), b.coeffs({1, 1, 2, 1}));
      for (const auto& tc : cc.classes)
        if (tc.i == 3) b.add("w4^-1", tc.sc.w.inverse(), b.a(0), b.a(0));
      break;
    case 'G': {
      const WeylElement s1v = WeylElement::reflection(rs, 0) * v;
      b.add_negative("v^-1", vi, a0, "a0");
      b.add("v", v, b.a(0), b.coeffs({2, 1}));
      b.add_negative("(s1v)^-1", s1v.inverse(), a0, "a0");
      b.add("s1v", s1v, b.a(0), b.coeffs({1, 1}));
      break;
    }
    default:
      return {};
  }
  return b.out;
}

}  // namespace liecheck::reference
