#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vinberg/errors.hpp"
#include "vinberg/rational.hpp"

namespace vinberg {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

  Matrix operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "matrix shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator*(const T& c) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != T(i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != T(0)) return false;
    return true;
  }

  T trace() const {
    require(rows_ == cols_, "trace of a non-square matrix");
    T t(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

// Fails with nullopt if any entry has a denominator.
inline std::optional<IntMatrix> to_integer(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (!is_integer(a(i, j))) return std::nullopt;
      r(i, j) = numerator(a(i, j));
    }
  return r;
}

// Column vector v times row covector alpha.
inline RatMatrix outer(const std::vector<Rat>& v, const std::vector<Rat>& alpha) {
  RatMatrix r(static_cast<int>(v.size()), static_cast<int>(alpha.size()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = v[i] * alpha[j];
  return r;
}

inline std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& v) {
  require(a.cols() == static_cast<int>(v.size()), "shape mismatch in mat_vec");
  std::vector<Rat> r(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

inline std::vector<Rat> row_mat(const std::vector<Rat>& alpha, const RatMatrix& a) {
  require(a.rows() == static_cast<int>(alpha.size()), "shape mismatch in row_mat");
  std::vector<Rat> r(a.cols(), Rat(0));
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) r[j] += alpha[i] * a(i, j);
  return r;
}

inline Rat dot(const std::vector<Rat>& alpha, const std::vector<Rat>& v) {
  require(alpha.size() == v.size(), "shape mismatch in dot");
  Rat s(0);
  for (size_t k = 0; k < v.size(); ++k) s += alpha[k] * v[k];
  return s;
}

namespace detail {

// Clears denominators row by row; row scaling preserves rank and scales det
// by the product of the scaling factors.
inline IntMatrix clear_rows(const RatMatrix& a, Int* factor) {
  IntMatrix w(a.rows(), a.cols());
  if (factor) *factor = 1;
  for (int i = 0; i < a.rows(); ++i) {
    Int d(1);
    for (int j = 0; j < a.cols(); ++j) d = lcm(d, denominator(a(i, j)));
    for (int j = 0; j < a.cols(); ++j) w(i, j) = numerator(a(i, j)) * divexact(d, denominator(a(i, j)));
    if (factor) *factor *= d;
  }
  return w;
}

// Bareiss fraction-free elimination.  Returns the rank; if det is requested
// the matrix must be square and *det receives the exact determinant of w.
inline int bareiss(IntMatrix w, Int* det) {
  const int n = w.rows(), m = w.cols();
  Int prev(1);
  int sign = 1, r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (w(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m; ++j) std::swap(w(p, j), w(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = c + 1; j < m; ++j)
        w(i, j) = divexact(w(r, c) * w(i, j) - w(i, c) * w(r, j), prev);
      w(i, c) = 0;
    }
    prev = w(r, c);
    ++r;
  }
  if (det) {
    require(n == m, "bareiss determinant of a non-square matrix");
    *det = (r == n) ? Int(sign) * prev : Int(0);
  }
  return r;
}

}  // namespace detail

inline int rank_of(const RatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return detail::bareiss(detail::clear_rows(a, nullptr), nullptr);
}

inline int rank_of(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return detail::bareiss(a, nullptr);
}

inline Rat det(const RatMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  if (a.rows() == 0) return Rat(1);
  Int factor;
  IntMatrix w = detail::clear_rows(a, &factor);
  Int d;
  detail::bareiss(std::move(w), &d);
  Rat r(d);
  r /= Rat(factor);
  return r;
}

inline Int det(const IntMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  if (a.rows() == 0) return Int(1);
  Int d;
  detail::bareiss(a, &d);
  return d;
}

// Reduced row echelon form; pivot column indices go to *pivots if given.
inline RatMatrix rref(RatMatrix w, std::vector<int>* pivots = nullptr) {
  const int n = w.rows(), m = w.cols();
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (w(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m; ++j) std::swap(w(p, j), w(r, j));
    Rat inv = Rat(1) / w(r, c);
    for (int j = c; j < m; ++j) w(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (int j = c; j < m; ++j) w(i, j) -= f * w(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return w;
}

// Basis of {x : a x = 0}, echelonized, one vector per free column.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
  std::vector<int> pivots;
  RatMatrix e = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(a.cols(), Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  require(a.rows() == a.cols(), "inverse of a non-square matrix");
  const int n = a.rows();
  RatMatrix w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = 1;
  }
  std::vector<int> pivots;
  RatMatrix e = rref(std::move(w), &pivots);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e(i, n + j);
  return inv;
}

// One solution of a x = b, or nullopt if inconsistent.
inline std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
  require(a.rows() == static_cast<int>(b.size()), "shape mismatch in solve");
  RatMatrix w(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) w(i, j) = a(i, j);
    w(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  RatMatrix e = rref(std::move(w), &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = e(static_cast<int>(r), a.cols());
  return x;
}

// Monic characteristic polynomial of a, low-to-high: coeff[k] multiplies x^k.
// Faddeev-LeVerrier keeps everything rational with no pivoting concerns.
inline std::vector<Rat> charpoly(const RatMatrix& a) {
  require(a.rows() == a.cols(), "charpoly of a non-square matrix");
  const int n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  if (n == 0) return c;
  RatMatrix m = a;
  c[n - 1] = -m.trace();
  for (int k = 2; k <= n; ++k) {
    RatMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    m = a * shifted;
    c[n - k] = -m.trace() / Rat(k);
  }
  return c;
}

}  // namespace vinberg
