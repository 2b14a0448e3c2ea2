#include "liecheck/chevalley.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace liecheck {

LieAlgebra::LieAlgebra(const RootSystem& rs, int jacobi_samples, std::uint64_t seed) : rs_(&rs) {
  const int R = rs.num_roots();
  const int P = rs.num_positive();
  n_.assign(static_cast<std::size_t>(R) * R, 0);
  sum_.assign(static_cast<std::size_t>(R) * R, -1);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b)
      if (auto s = rs.index_of(rs.root(a).alpha + rs.root(b).alpha)) sum_[idx(a, b)] = *s;

  std::vector<Rational> npos(static_cast<std::size_t>(P) * P, Rational(0));
  auto sq = [&](int k) { return Rational(rs.root_sqlen(k)); };
  auto P2 = [&](int a, int b) -> Rational& { return npos[static_cast<std::size_t>(a) * P + b]; };

  std::function<Rational(int, int)> get = [&](int a, int b) -> Rational {
    int c = sum_index(a, b);
    if (c < 0) return 0;
    bool pa = a < P, pb = b < P;
    if (pa && pb) return P2(a, b);
    if (!pa && !pb) return -get(rs.negative_of(a), rs.negative_of(b));
    if (!pa) return -get(b, a);
    if (c < P) return -sq(c) / sq(a) * get(rs.negative_of(b), c);
    return sq(c) / sq(b) * get(rs.negative_of(c), a);
  };

  for (int xi = 0; xi < P; ++xi) {
    if (rs.root(xi).height == 1) continue;
    int al = -1, be = -1;
    for (int a = 0; a < xi && al < 0; ++a) {
      int d = sum_index(xi, rs.negative_of(a));
      if (d >= 0 && d < P) {
        al = a;
        be = d;
      }
    }
    if (al < 0) throw InternalError("no extraspecial pair");
    int p = 0;
    for (RootCoeffs t = rs.root(be).alpha - rs.root(al).alpha; rs.index_of(t); t -= rs.root(al).alpha) ++p;
    Rational nab = p + 1;
    P2(al, be) = nab;
    P2(be, al) = -nab;
    for (int g = 0; g < P; ++g) {
      if (g == al) continue;
      int d = sum_index(xi, rs.negative_of(g));
      if (d < 0 || d >= P || d <= g) continue;
      Rational t1 = 0, t2 = 0;
      int bg = sum_index(be, rs.negative_of(g));
      if (bg >= 0) t1 = get(be, rs.negative_of(g)) * get(al, rs.negative_of(d)) / sq(bg);
      int ag = sum_index(al, rs.negative_of(g));
      if (ag >= 0) t2 = get(rs.negative_of(g), al) * get(be, rs.negative_of(d)) / sq(ag);
      Rational v = sq(xi) / nab * (t1 + t2);
      P2(g, d) = v;
      P2(d, g) = -v;
    }
  }
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (sum_index(a, b) < 0) continue;
      Rational v = get(a, b);
      if (denominator(v) != 1) throw InternalError("non-integral structure constant");
      n_[idx(a, b)] = static_cast<int>(numerator(v));
    }

  JacobiStats st = rs.rank() <= 4 ? check_jacobi_exhaustive() : check_jacobi_sampled(jacobi_samples, seed);
  if (!st.ok) throw JacobiFailure(rs.label() + ": " + st.failure);
}

SparseVec LieAlgebra::bracket_basis(int a, int b) const {
  const int R = rs_->num_roots();
  const int n = rs_->rank();
  SparseVec out;
  bool ra = a < R, rb = b < R;
  if (ra && rb) {
    if (b == rs_->negative_of(a)) {
      const RootCoeffs& c = rs_->root(a).coroot;
      for (int i = 0; i < n; ++i)
        if (c[i]) out[R + i] = c[i];
    } else if (int s = sum_index(a, b); s >= 0) {
      out[s] = N(a, b);
    }
  } else if (ra) {
    int w = rs_->root(a).omega[b - R];
    if (w) out[a] = -w;
  } else if (rb) {
    int w = rs_->root(b).omega[a - R];
    if (w) out[b] = w;
  }
  return out;
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y)
      for (const auto& [k, z] : bracket_basis(i, j)) {
        long long& t = out[k];
        t += xi * yj * z;
        if (t == 0) out.erase(k);
      }
  return out;
}

bool LieAlgebra::jacobi_triple(int a, int b, int c, std::string* why) const {
  SparseVec ea{{a, 1}}, eb{{b, 1}}, ec{{c, 1}};
  SparseVec s = bracket(ea, bracket(eb, ec));
  for (const auto& [k, v] : bracket(eb, bracket(ec, ea))) s[k] += v;
  for (const auto& [k, v] : bracket(ec, bracket(ea, eb))) s[k] += v;
  for (const auto& [k, v] : s)
    if (v != 0) {
      if (why) {
        std::ostringstream os;
        os << "Jacobi fails on basis triple (" << a << "," << b << "," << c << ")";
        *why = os.str();
      }
      return false;
    }
  return true;
}

LieAlgebra::JacobiStats LieAlgebra::check_jacobi_exhaustive() const {
  JacobiStats st;
  const int d = dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        ++st.triples;
        if (!jacobi_triple(a, b, c, &st.failure)) {
          st.ok = false;
          return st;
        }
      }
  return st;
}

LieAlgebra::JacobiStats LieAlgebra::check_jacobi_sampled(int samples, std::uint64_t seed) const {
  JacobiStats st;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim() - 1);
  for (int t = 0; t < samples; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    ++st.triples;
    if (!jacobi_triple(a, b, c, &st.failure)) {
      st.ok = false;
      return st;
    }
  }
  return st;
}

// ---------------------------------------------------------------------------

TSubspace::TSubspace(const LieAlgebra& lie) : lie_(&lie) {
  const int R = lie.system().num_roots();
  comps_.reserve(R + 1);
  for (int k = 0; k < R; ++k) comps_.emplace_back(1, 0);
  comps_.emplace_back(lie.system().rank(), 0);
}

TSubspace TSubspace::zero(const LieAlgebra& lie) { return TSubspace(lie); }

TSubspace TSubspace::full(const LieAlgebra& lie) {
  TSubspace m(lie);
  for (int k = 0; k < lie.system().num_roots(); ++k) m.comps_[k] = Matrix::identity(1);
  m.comps_.back() = Matrix::identity(lie.system().rank());
  return m;
}

TSubspace TSubspace::borel(const LieAlgebra& lie) { return parabolic(lie, ParabolicSubset()); }

TSubspace TSubspace::parabolic(const LieAlgebra& lie, ParabolicSubset J) {
  const RootSystem& rs = lie.system();
  TSubspace m(lie);
  m.comps_.back() = Matrix::identity(rs.rank());
  for (int k = 0; k < rs.num_roots(); ++k) {
    const Root& r = rs.root(k);
    bool keep = !r.positive();
    if (!keep) {
      keep = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (r.alpha[i] != 0 && !J.contains(i)) keep = false;
    }
    if (keep) m.comps_[k] = Matrix::identity(1);
  }
  return m;
}

Weight TSubspace::slot_weight(int s) const {
  if (s == cartan_slot()) return lie_->system().zero_weight();
  return lie_->system().root(s).omega;
}

int TSubspace::slot_of(const Weight& mu) const {
  if (mu.is_zero()) return cartan_slot();
  auto k = lie_->system().index_of_weight(mu);
  return k ? *k : -1;
}

Matrix TSubspace::component(const Weight& mu) const {
  int s = slot_of(mu);
  if (s < 0) return Matrix(0, 0);
  return comps_[s];
}

int TSubspace::dim() const {
  int d = 0;
  for (const auto& c : comps_) d += c.cols();
  return d;
}

CharacterPoly TSubspace::character() const {
  CharacterPoly f;
  for (int s = 0; s < num_slots(); ++s) f.add(slot_weight(s), comps_[s].cols());
  return f;
}

bool TSubspace::contains(const TSubspace& o) const {
  for (int s = 0; s < num_slots(); ++s)
    if (!column_space_contains(comps_[s], o.comps_[s])) return false;
  return true;
}

bool operator==(const TSubspace& a, const TSubspace& b) {
  if (a.dim() != b.dim()) return false;
  return a.contains(b);
}

void TSubspace::set_slot(int s, Matrix basis) {
  if (basis.rows() != ambient_dim(s)) throw InternalError("component has wrong ambient dimension");
  comps_[s] = basis.cols() == 0 ? basis : column_basis(basis);
}

int ad_block(const LieAlgebra& lie, int g, int s, Matrix* block) {
  const RootSystem& rs = lie.system();
  const int R = rs.num_roots();
  if (s == R) {
    Matrix b(1, rs.rank());
    for (int j = 0; j < rs.rank(); ++j) b(0, j) = -rs.root(g).omega[j];
    *block = b;
    return g;
  }
  if (s == rs.negative_of(g)) {
    Matrix b(rs.rank(), 1);
    for (int j = 0; j < rs.rank(); ++j) b(j, 0) = rs.root(g).coroot[j];
    *block = b;
    return R;
  }
  int t = lie.sum_index(g, s);
  if (t < 0) return -1;
  Matrix b(1, 1);
  b(0, 0) = lie.N(g, s);
  *block = b;
  return t;
}

bool is_b_stable(const TSubspace& M, std::string* why) {
  const LieAlgebra& lie = M.lie();
  const RootSystem& rs = lie.system();
  for (int beta = 0; beta < rs.num_positive(); ++beta) {
    int g = rs.negative_of(beta);
    for (int s = 0; s < M.num_slots(); ++s) {
      if (M.slot_dim(s) == 0) continue;
      Matrix A;
      int t = ad_block(lie, g, s, &A);
      if (t < 0) continue;
      if (!column_space_contains(M.slot(t), A * M.slot(s))) {
        if (why) {
          RootCoeffs a;
          weight_to_alpha(rs, M.slot_weight(s), &a);
          *why = "ad(x_{-" + rs.root(beta).alpha.to_string() + "}) leaves M at weight " + a.to_string();
        }
        return false;
      }
    }
  }
  return true;
}

TSubspace largest_pstable_subspace(const TSubspace& M, int i) {
  std::string why;
  if (!is_b_stable(M, &why)) throw BNotStable(why);
  const LieAlgebra& lie = M.lie();
  const RootSystem& rs = lie.system();
  std::vector<int> gens{i};
  for (int beta = 0; beta < rs.num_positive(); ++beta) gens.push_back(rs.negative_of(beta));

  TSubspace N = M;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < N.num_slots(); ++s) {
      for (int g : gens) {
        if (N.slot_dim(s) == 0) break;
        Matrix A;
        int t = ad_block(lie, g, s, &A);
        if (t < 0 || N.slot_dim(t) == N.ambient_dim(t)) continue;
        Matrix C = annihilator(N.slot(t)) * (A * N.slot(s));
        if (C.is_zero()) continue;
        N.set_slot(s, N.slot(s) * kernel(C));
        changed = true;
      }
    }
  }
  return N;
}

int StringDecomp::dimension() const {
  int d = 0;
  for (const auto& s : strings) d += s.length * s.multiplicity;
  return d;
}

CharacterPoly StringDecomp::character(const RootSystem& rs) const {
  CharacterPoly f;
  const Weight a = rs.simple_root_weight(alpha);
  for (const auto& s : strings) {
    Weight mu = s.top;
    for (int k = 0; k < s.length; ++k, mu -= a) f.add(mu, s.multiplicity);
  }
  return f;
}

StringDecomp string_decomposition(const TSubspace& M, int i) {
  std::string why;
  if (!is_b_stable(M, &why)) throw BNotStable(why);
  const LieAlgebra& lie = M.lie();
  const RootSystem& rs = lie.system();
  const Weight a = rs.simple_root_weight(i);
  const int e = rs.negative_of(i);  // x_{-alpha_i}

  std::map<std::pair<Weight, int>, int> acc;
  std::vector<bool> done(M.num_slots(), false);
  auto live = [&](const Weight& mu) {
    int s = M.slot_of(mu);
    return s >= 0 && M.slot_dim(s) > 0 ? s : -1;
  };
  for (int s0 = 0; s0 < M.num_slots(); ++s0) {
    if (done[s0] || M.slot_dim(s0) == 0) continue;
    Weight mu = M.slot_weight(s0);
    while (live(mu + a) >= 0) mu += a;
    std::vector<int> run;
    for (Weight nu = mu; live(nu) >= 0; nu -= a) run.push_back(live(nu));
    for (int s : run) done[s] = true;

    const int m = static_cast<int>(run.size());
    std::vector<Matrix> X;  // X[k]: run[k] -> run[k+1] in M-coordinates
    for (int k = 0; k + 1 < m; ++k) {
      Matrix A;
      int t = ad_block(lie, e, run[k], &A);
      if (t != run[k + 1]) {
        X.emplace_back(M.slot_dim(run[k + 1]), M.slot_dim(run[k]));
        continue;
      }
      X.push_back(solve(M.slot(run[k + 1]), A * M.slot(run[k])));
    }
    // r[a][b]: rank of the composite run[a] -> run[b]
    std::vector<std::vector<int>> r(m, std::vector<int>(m, 0));
    for (int x = 0; x < m; ++x) {
      Matrix comp = Matrix::identity(M.slot_dim(run[x]));
      r[x][x] = M.slot_dim(run[x]);
      for (int y = x + 1; y < m; ++y) {
        comp = X[y - 1] * comp;
        r[x][y] = rank(comp);
      }
    }
    auto R = [&](int x, int y) { return (x < 0 || y >= m) ? 0 : r[x][y]; };
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y) {
        int cnt = R(x, y) - R(x - 1, y) - R(x, y + 1) + R(x - 1, y + 1);
        if (cnt < 0) throw InternalError("negative string count");
        if (cnt == 0) continue;
        Weight top = mu;
        for (int k = 0; k < x; ++k) top -= a;
        acc[{top, y - x + 1}] += cnt;
      }
  }
  StringDecomp sd;
  sd.alpha = i;
  for (const auto& [key, cnt] : acc) {
    SlString s;
    s.top = key.first;
    s.length = key.second;
    s.multiplicity = cnt;
    s.c = s.top[i] - (s.length - 1);
    if (s.c > 0) throw InternalError("string with positive lowest pairing in a B-stable module");
    sd.strings.push_back(s);
  }
  return sd;
}

CharacterPoly string_rule_h0(const RootSystem& rs, const StringDecomp& sd) {
  StringDecomp part{sd.alpha, {}};
  for (const auto& s : sd.strings)
    if (s.c == 0) part.strings.push_back(s);
  return part.character(rs);
}

CharacterPoly string_rule_h1(const RootSystem& rs, const StringDecomp& sd) {
  CharacterPoly f;
  const Weight a = rs.simple_root_weight(sd.alpha);
  for (const auto& s : sd.strings) {
    if (s.c > -2) continue;
    for (int x = 0; x < s.length; ++x)
      for (int b = 0; b <= -s.c - 2; ++b) f.add(s.top - (x + s.c + 1 + b) * a, s.multiplicity);
  }
  return f;
}

}  // namespace liecheck
