#include "liecheck/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace liecheck {

bool is_valid_type(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= kMaxRank;
    case 'B': return rank >= 2 && rank <= kMaxRank;
    case 'C': return rank >= 3 && rank <= kMaxRank;
    case 'D': return rank >= 4 && rank <= kMaxRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

using Mat = std::vector<std::vector<int>>;

void link(Mat& a, int i, int j) { a[i][j] = a[j][i] = -1; }

// 0-based Bourbaki numbering.
Mat cartan_matrix(char type, int n) {
  Mat a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      link(a, 0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  if (!is_valid_type(type, rank))
    throw InvalidType(std::string(1, type) + std::to_string(rank) + " is not a supported simple type");
  cartan_ = cartan_matrix(type, rank);

  // Relative squared lengths from d_j / d_i = a_ij / a_ji along the diagram.
  std::vector<int> num(rank, 0), den(rank, 1);
  num[0] = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop_front();
    for (int j = 0; j < rank; ++j) {
      if (j == i || cartan_[i][j] == 0 || num[j] != 0) continue;
      num[j] = num[i] * cartan_[i][j];
      den[j] = den[i] * cartan_[j][i];
      int g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      if (den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      todo.push_back(j);
    }
  }
  int l = 1;
  for (int i = 0; i < rank; ++i) l = std::lcm(l, den[i]);
  sqlen_.resize(rank);
  for (int i = 0; i < rank; ++i) sqlen_[i] = num[i] * (l / den[i]);
  int g = 0;
  for (int s : sqlen_) g = std::gcd(g, s);
  for (int& s : sqlen_) s /= g;
  max_sqlen_ = *std::max_element(sqlen_.begin(), sqlen_.end());
  simply_laced_ = max_sqlen_ == 1;

  // Close the simple roots under simple reflections, tracking coroots.
  std::vector<Root> pos;
  std::unordered_map<RootCoeffs, int, LatticeHash> seen;
  std::deque<int> queue;
  for (int i = 0; i < rank; ++i) {
    Root r;
    r.alpha = RootCoeffs::unit(rank, i);
    r.coroot = RootCoeffs::unit(rank, i);
    r.length_class = sqlen_[i] == max_sqlen_ ? LengthClass::Long : LengthClass::Short;
    seen[r.alpha] = static_cast<int>(pos.size());
    queue.push_back(static_cast<int>(pos.size()));
    pos.push_back(r);
  }
  while (!queue.empty()) {
    Root cur = pos[queue.front()];
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      int p = 0;  // <beta, alpha_i^vee>
      int q = 0;  // <alpha_i, beta^vee>
      for (int j = 0; j < rank; ++j) {
        p += cartan_[i][j] * cur.alpha[j];
        q += cur.coroot[j] * cartan_[j][i];
      }
      Root nr = cur;
      nr.alpha[i] -= p;
      nr.coroot[i] -= q;
      if (!nr.alpha.all_nonnegative() || nr.alpha.is_zero()) continue;
      if (seen.count(nr.alpha)) continue;
      seen[nr.alpha] = static_cast<int>(pos.size());
      queue.push_back(static_cast<int>(pos.size()));
      pos.push_back(nr);
    }
  }
  for (auto& r : pos) {
    r.height = r.alpha.sum();
    r.omega = omega_of(r.alpha);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return b.alpha < a.alpha;
  });
  num_positive_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& r : pos) {
    Root n = r;
    n.alpha = -r.alpha;
    n.coroot = -r.coroot;
    n.omega = -r.omega;
    n.height = -r.height;
    roots_.push_back(n);
  }
  for (int k = 0; k < num_roots(); ++k) {
    by_alpha_[roots_[k].alpha] = k;
    by_omega_[roots_[k].omega] = k;
  }
  highest_ = num_positive_ - 1;
  if (!simply_laced_) {
    for (int k = num_positive_ - 1; k >= 0; --k)
      if (!roots_[k].is_long()) {
        highest_short_ = k;
        break;
      }
  }
}

std::optional<int> RootSystem::index_of(const RootCoeffs& alpha) const {
  auto it = by_alpha_.find(alpha);
  if (it == by_alpha_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::index_of_weight(const Weight& omega) const {
  auto it = by_omega_.find(omega);
  if (it == by_omega_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::form2(const RootCoeffs& a, const RootCoeffs& b) const {
  // 2(alpha_i, alpha_j) = a_ij * |alpha_i|^2
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * cartan_[i][j] * sqlen_[i];
  }
  return s;
}

Weight RootSystem::omega_of(const RootCoeffs& alpha) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * alpha[j];
  return w;
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

int RootSystem::pairing(const Weight& mu, int k) const {
  const RootCoeffs& c = roots_[k].coroot;
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += mu[i] * c[i];
  return s;
}

Weight RootSystem::reflect(int i, const Weight& mu) const {
  Weight r = mu;
  int c = mu[i];
  if (c == 0) return r;
  for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[j][i];
  return r;
}

std::vector<int> RootSystem::co_minuscule_roots() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (highest_root().alpha[i] == 1) out.push_back(i);
  return out;
}

std::vector<int> RootSystem::minuscule_weights() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i) {
    bool ok = true;
    for (int k = 0; k < num_positive_ && ok; ++k) ok = roots_[k].coroot[i] <= 1;
    if (ok) out.push_back(i);
  }
  return out;
}

int RootSystem::dual_coxeter_number() const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += highest_root().alpha[i] * sqlen_[i];
  if (s % max_sqlen_ != 0) throw InternalError("non-integral dual Coxeter sum");
  return 1 + s / max_sqlen_;
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  switch (type_) {
    case 'A': return fact(rank_ + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << rank_) * fact(rank_);
    case 'D': return (std::uint64_t{1} << (rank_ - 1)) * fact(rank_);
    case 'E': return rank_ == 6 ? 51840 : rank_ == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

}  // namespace liecheck
