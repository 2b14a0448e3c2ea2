#pragma once

// Test-side reference implementations. They share only the Cartan matrix
// with the library and use plain integer matrices in simple-root coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "liecheck/rootsys.hpp"
#include "liecheck/weyl.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<int>;  // n x n row-major, acts on column vectors of simple-root coefficients

inline Mat identity(int n) {
  Mat m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// s_i(alpha_j) = alpha_j - a_ij alpha_i; column j of the matrix is s_i(alpha_j).
inline Mat reflection(const liecheck::RootSystem& rs, int i) {
  const int n = rs.rank();
  Mat m = identity(n);
  for (int j = 0; j < n; ++j) m[i * n + j] -= rs.cartan(i, j);
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, int n) {
  Mat c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i * n + k])
        for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

inline Vec apply(const Mat& a, const Vec& v, int n) {
  Vec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += a[i * n + j] * v[j];
  return r;
}

inline Mat word_matrix(const liecheck::RootSystem& rs, const liecheck::Word& w) {
  const int n = rs.rank();
  Mat m = identity(n);
  for (int s : w) m = mul(m, reflection(rs, s), n);
  return m;
}

inline Mat element_matrix(const liecheck::WeylElement& w) {
  const auto& rs = w.system();
  const int n = rs.rank();
  Mat m(n * n, 0);
  for (int j = 0; j < n; ++j) {
    liecheck::RootCoeffs img = w.act_alpha(liecheck::RootCoeffs::unit(n, j));
    for (int i = 0; i < n; ++i) m[i * n + j] = img[i];
  }
  return m;
}

// Positive roots by the root-string algorithm: beta + alpha_i is a root iff
// q > 0 where q = p - <beta, alpha_i^vee> and p is the alpha_i-depth of beta.
inline std::vector<Vec> positive_roots(const liecheck::RootSystem& rs) {
  const int n = rs.rank();
  std::set<Vec> roots;
  std::vector<Vec> layer;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    roots.insert(e);
  }
  while (!layer.empty()) {
    std::vector<Vec> next;
    for (const Vec& b : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (Vec c = b;;) {
          c[i] -= 1;
          if (!roots.count(c)) break;
          ++p;
        }
        int pair = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pair += b[j] * rs.cartan(i, j);
        if (p - pair > 0) {
          Vec c = b;
          c[i] += 1;
          if (roots.insert(c).second) next.push_back(c);
        }
      }
    layer.swap(next);
  }
  return {roots.begin(), roots.end()};
}

inline bool is_positive(const Vec& v) {
  bool nz = false;
  for (int x : v) {
    if (x < 0) return false;
    nz |= x != 0;
  }
  return nz;
}

inline int length(const liecheck::RootSystem& rs, const Mat& m) {
  int l = 0;
  for (const Vec& b : positive_roots(rs)) l += !is_positive(apply(m, b, rs.rank()));
  return l;
}

// All group elements as matrices, by closure.
inline std::set<Mat> group(const liecheck::RootSystem& rs, std::uint32_t mask = ~0u) {
  const int n = rs.rank();
  std::set<Mat> seen{identity(n)};
  std::vector<Mat> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Mat> nxt;
    for (const Mat& m : frontier)
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) {
          Mat k = mul(m, reflection(rs, i), n);
          if (seen.insert(k).second) nxt.push_back(k);
        }
    frontier.swap(nxt);
  }
  return seen;
}

// u <= w iff u is the product of a subword of a reduced word of w.
inline bool bruhat_subword(const liecheck::RootSystem& rs, const liecheck::Word& reduced_w, const Mat& u) {
  const int n = rs.rank();
  const int l = static_cast<int>(reduced_w.size());
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    Mat m = identity(n);
    for (int k = 0; k < l; ++k)
      if ((mask >> k) & 1u) m = mul(m, reflection(rs, reduced_w[k]), n);
    if (m == u) return true;
  }
  return false;
}

// Lexicographically least reduced word, by increasing-length breadth-first
// search over words in lexicographic order.
inline liecheck::Word lex_least_word(const liecheck::RootSystem& rs, const Mat& target) {
  const int n = rs.rank();
  const int l = length(rs, target);
  std::vector<std::pair<liecheck::Word, Mat>> level{{{}, identity(n)}};
  for (int d = 0; d < l; ++d) {
    std::vector<std::pair<liecheck::Word, Mat>> nxt;
    std::set<Mat> seen;
    for (auto& [w, m] : level)
      for (int i = 0; i < n; ++i) {
        Mat k = mul(m, reflection(rs, i), n);
        if (length(rs, k) != d + 1 || !seen.insert(k).second) continue;
        liecheck::Word w2 = w;
        w2.push_back(i);
        nxt.push_back({w2, k});
      }
    level.swap(nxt);
  }
  for (auto& [w, m] : level)
    if (m == target) return w;
  return {};
}

// Random reduced word of w: peel random right descents.
inline liecheck::Word random_reduced_word(const liecheck::WeylElement& w, std::mt19937_64& rng) {
  liecheck::Word rev;
  liecheck::WeylElement u = w;
  while (!u.is_identity()) {
    std::vector<int> d;
    for (int s = 0; s < u.system().rank(); ++s)
      if (u.is_right_descent(s)) d.push_back(s);
    int s = d[rng() % d.size()];
    rev.push_back(s);
    u = u.right_mul(s);
  }
  return {rev.rbegin(), rev.rend()};
}

inline liecheck::WeylElement random_element(const liecheck::RootSystem& rs, std::mt19937_64& rng, int steps) {
  liecheck::WeylElement w(rs);
  for (int k = 0; k < steps; ++k) w = w.right_mul(static_cast<int>(rng() % rs.rank()));
  return w;
}

// Dual Coxeter number 1 + sum of the coroot coefficients of the highest root,
// with squared lengths read off the symmetrizable Cartan matrix.
inline int dual_coxeter(const liecheck::RootSystem& rs) {
  auto roots = positive_roots(rs);
  Vec top = *std::max_element(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha < hb;
  });
  const int n = rs.rank();
  // d_i proportional to |alpha_i|^2: a_ij / a_ji = d_j / d_i
  std::vector<long long> d(n, 0);
  d[0] = 6;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i] && !d[j] && rs.cartan(i, j) != 0) {
          d[j] = d[i] * rs.cartan(i, j) / rs.cartan(j, i);
          changed = true;
        }
  }
  long long mx = *std::max_element(d.begin(), d.end());
  long long sum = 0;  // coroot coefficient c_i = a_i |alpha_i|^2 / |alpha_0|^2
  for (int i = 0; i < n; ++i) sum += top[i] * d[i];
  return static_cast<int>(1 + sum / mx);
}

inline int num_positive_formula(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

inline std::uint64_t weyl_order_formula(char t, int n) {
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (t) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1ull << n) * fact(n);
    case 'D': return (1ull << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case 'F': return 1152;
    default: return 12;
  }
}

}  // namespace oracle
