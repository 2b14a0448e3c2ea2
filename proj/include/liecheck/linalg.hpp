#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace liecheck {

using Rational = boost::multiprecision::cpp_rational;

// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix hcat(const Matrix& o) const;
  Matrix column(int j) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form; pivot columns returned through `pivots`.
Matrix rref(const Matrix& m, std::vector<int>* pivots = nullptr);
int rank(const Matrix& m);
// Columns form a basis of the null space (cols x k).
Matrix kernel(const Matrix& m);
// Basis of the column space extracted from the pivot columns (rows x r).
Matrix column_basis(const Matrix& m);
// Rows y (as rows of the result) with y * m = 0: annihilator of col(m).
Matrix annihilator(const Matrix& m);
// Solves a * x = b exactly; throws InternalError if inconsistent.
Matrix solve(const Matrix& a, const Matrix& b);
// col(a) contains col(b)
bool column_space_contains(const Matrix& a, const Matrix& b);

}  // namespace liecheck
