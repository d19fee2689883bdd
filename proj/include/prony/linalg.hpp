#ifndef PRONY_LINALG_HPP
#define PRONY_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "prony/arith.hpp"
#include "prony/poly.hpp"

namespace prony {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q. Row and column labels are optional; when
// set they match the dimensions and are duplicate-free.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  const std::vector<Exponent>& row_labels() const { return row_labels_; }
  const std::vector<Exponent>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<Exponent> labels);
  void set_col_labels(std::vector<Exponent> labels);

  Matrix transpose() const;
  // Sub-matrix on the given row and column positions (labels carried over).
  Matrix select(const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;

  bool is_zero() const;
  std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  // Entry equality only; labels are ignored.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  std::vector<Exponent> row_labels_;
  std::vector<Exponent> col_labels_;
};

Vector operator*(const Matrix& a, const Vector& x);

struct RrefResult {
  Matrix r;  // nonzero rows only come first; rows beyond `rank` are zero
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Fraction-free forward elimination on the integer-scaled rows, then
// normalization and back substitution. Pivot = first nonzero entry in
// column order, so the result is deterministic.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Canonical null-space basis: one vector per free column, with that
// coordinate equal to 1 and the other free coordinates 0. Ordered by free
// column position.
std::vector<Vector> kernel_basis(const Matrix& m);

// Unique x with m x = b. Throws Singular when m is not invertible.
Vector solve_square(const Matrix& m, const Vector& b);

// Monic characteristic polynomial det(X I - m), division-free (Berkowitz).
Poly char_poly(const Matrix& m);

// p(m) for a univariate polynomial p.
Matrix poly_eval_matrix(const Poly& p, const Matrix& m);

}  // namespace prony

#endif  // PRONY_LINALG_HPP
