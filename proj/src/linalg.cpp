#include "liecheck/linalg.hpp"

#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  Matrix m(static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in product");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw InternalError("matrix shape mismatch in hcat");
  Matrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::column(int j) const {
  Matrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

Matrix rref(const Matrix& m, std::vector<int>* pivots) {
  Matrix a = m;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return a;
}

int rank(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

Matrix kernel(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  int k = m.cols() - static_cast<int>(piv.size());
  Matrix ker(m.cols(), k);
  int col = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    ker(f, col) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) ker(piv[i], col) = -r(static_cast<int>(i), f);
    ++col;
  }
  return ker;
}

Matrix column_basis(const Matrix& m) {
  std::vector<int> piv;
  rref(m, &piv);
  Matrix b(m.rows(), static_cast<int>(piv.size()));
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(j)) = m(i, piv[j]);
  return b;
}

Matrix annihilator(const Matrix& m) { return kernel(m.transpose()).transpose(); }

Matrix solve(const Matrix& a, const Matrix& b) {
  std::vector<int> piv;
  Matrix aug = rref(a.hcat(b), &piv);
  for (int p : piv)
    if (p >= a.cols()) throw InternalError("inconsistent linear system");
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(static_cast<int>(i), a.cols() + j);
  return x;
}

bool column_space_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(a.hcat(b)) == rank(a);
}

}  // namespace liecheck
