#include "prony/linalg.hpp"

#include <set>
#include <sstream>

namespace prony {

namespace {

void check_labels(const std::vector<Exponent>& labels, std::size_t expected) {
  if (labels.empty()) return;
  if (labels.size() != expected) {
    throw Error(Errc::DimensionMismatch, "label count differs from dimension");
  }
  std::set<Exponent> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw Error(Errc::InvalidInput, "duplicate matrix labels");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) {
      throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row_labels(std::vector<Exponent> labels) {
  check_labels(labels, rows_);
  row_labels_ = std::move(labels);
}

void Matrix::set_col_labels(std::vector<Exponent> labels) {
  check_labels(labels, cols_);
  col_labels_ = std::move(labels);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      s(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  if (!row_labels_.empty()) {
    std::vector<Exponent> l;
    for (auto i : rows) l.push_back(row_labels_[i]);
    s.set_row_labels(std::move(l));
  }
  if (!col_labels_.empty()) {
    std::vector<Exponent> l;
    for (auto j : cols) l.push_back(col_labels_[j]);
    s.set_col_labels(std::move(l));
  }
  return s;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return select(all, cols);
}

bool Matrix::is_zero() const {
  for (const auto& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(Errc::DimensionMismatch, "matrix product dimensions");
  }
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::DimensionMismatch, "matrix sum dimensions");
  }
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    c.data_[k] = a.data_[k] + b.data_[k];
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(Errc::DimensionMismatch, "matrix difference dimensions");
  }
  Matrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    c.data_[k] = a.data_[k] - b.data_[k];
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw Error(Errc::DimensionMismatch, "matrix-vector dimensions");
  }
  Vector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Clear denominators row by row; row scaling keeps the row space.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m(i, j).value().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m(i, j).value();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }

  // Bareiss forward elimination. Entries stay integral minors, so the
  // division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  RrefResult out;
  out.rank = pivots.size();
  out.pivots = pivots;
  out.r = Matrix(rows, cols);
  Matrix& R = out.r;
  for (std::size_t i = 0; i < out.rank; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = pivots[i]; j < cols; ++j) {
      if (a[i][j] != 0) R(i, j) = Rational(a[i][j], piv);
    }
  }
  // Back substitution on the normalized rows.
  for (std::size_t i = out.rank; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = R(k, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (!R(i, j).is_zero()) R(k, j) -= f * R(i, j);
      }
    }
  }
  R.set_col_labels(m.col_labels());
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solve_square(const Matrix& m, const Vector& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::DimensionMismatch, "matrix not square");
  if (b.size() != n) throw Error(Errc::DimensionMismatch, "rhs length");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const RrefResult rr = rref(aug);
  if (rr.rank != n || (n > 0 && rr.pivots.back() == n)) {
    throw Error(Errc::Singular, "matrix is singular");
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rr.r(i, n);
  return x;
}

Poly char_poly(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::DimensionMismatch, "matrix not square");
  // vect holds det(X I - A_r) with leading coefficient first.
  std::vector<Rational> vect = {Rational(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column [1, -a, -R C, -R A C, ..., -R A^{r-1} C] for the
    // bordered block with new row R, new column C and corner a.
    std::vector<Rational> q = {Rational(1), -m(r, r)};
    Vector v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational dot(0);
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * v[j];
      q.push_back(-dot);
      if (k + 1 < r) {
        Vector w(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) w[i] += m(i, j) * v[j];
        }
        v = std::move(w);
      }
    }
    std::vector<Rational> next(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (i - j < q.size()) next[i] += q[i - j] * vect[j];
      }
    }
    vect = std::move(next);
  }
  std::vector<Rational> ascending(vect.rbegin(), vect.rend());
  return Poly::univariate(ascending);
}

Matrix poly_eval_matrix(const Poly& p, const Matrix& m) {
  const auto c = univariate_coeffs(p);
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

}  // namespace prony
