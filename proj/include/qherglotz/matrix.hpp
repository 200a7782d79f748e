#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qherglotz/errors.hpp"
#include "qherglotz/quaternion.hpp"

namespace qherglotz {

using Complex = std::complex<double>;

namespace detail {
inline Complex conj_entry(const Complex& c) { return std::conj(c); }
inline Quaternion conj_entry(const Quaternion& q) { return conj(q); }
inline double abs_entry(const Complex& c) { return std::abs(c); }
inline double abs_entry(const Quaternion& q) { return q.abs(); }
inline double norm2_entry(const Complex& c) { return std::norm(c); }
inline double norm2_entry(const Quaternion& q) { return q.norm2(); }
}  // namespace detail

/// Dense row-major matrix over a (possibly noncommutative) scalar ring.
/// Products keep the order of factors, so Matrix<Quaternion> is an honest
/// matrix over H.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix: data size does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) m(a, a) = T{1.0};
    return m;
  }
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t a = 0; a < d.size(); ++a) m(a, a) = T{d[a]};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> data() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("matrix: block out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeError("matrix: block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t a = 0; a < data_.size(); ++a) data_[a] += o.data_[a];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t a = 0; a < data_.size(); ++a) data_[a] -= o.data_[a];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Quaternion>;
using CMatrix = Matrix<Complex>;

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) { return a += b; }
template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) { return a -= b; }
template <typename T>
Matrix<T> operator-(Matrix<T> a) { return a *= -1.0; }
template <typename T>
Matrix<T> operator*(Matrix<T> a, double s) { return a *= s; }
template <typename T>
Matrix<T> operator*(double s, Matrix<T> a) { return a *= s; }

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& lhs = a(r, k);
      for (std::size_t col = 0; col < b.cols(); ++col) c(r, col) += lhs * b(k, col);
    }
  }
  return c;
}

// Scalar on the left multiplies every entry from the left: (s M)_{rc} = s M_{rc}.
template <typename T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& m, const T& s) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * s;
  return out;
}

/// Conjugate transpose.
template <typename T>
Matrix<T> adjoint(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = detail::conj_entry(m(r, c));
  return out;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

template <typename T>
Matrix<T> entrywise_conj(const Matrix<T>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = detail::conj_entry(m(r, c));
  return out;
}

template <typename T>
double frobenius_norm(const Matrix<T>& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += detail::norm2_entry(v);
  return std::sqrt(s);
}

/// Largest entry modulus.
template <typename T>
double max_abs(const Matrix<T>& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s = std::max(s, detail::abs_entry(v));
  return s;
}

/// Tolerance scale used throughout: max(1, largest entry modulus).
template <typename T>
double scale_of(const Matrix<T>& m) {
  return std::max(1.0, max_abs(m));
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  return max_abs(a - b);
}

// Largest entry modulus of A - A^*.
template <typename T>
double hermitian_defect(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("hermitian_defect: matrix is not square");
  return max_abs(a - adjoint(a));
}

// (A + A^*) / 2.
template <typename T>
Matrix<T> hermitian_part(const Matrix<T>& a) {
  return (a + adjoint(a)) * 0.5;
}

// Horizontal and vertical concatenation of equally sized blocks.
template <typename T>
Matrix<T> hstack(std::span<const Matrix<T>> parts) {
  if (parts.empty()) return {};
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw ShapeError("hstack: row counts differ");
    cols += p.cols();
  }
  Matrix<T> out(parts[0].rows(), cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    out.set_block(0, c0, p);
    c0 += p.cols();
  }
  return out;
}

template <typename T>
Matrix<T> vstack(std::span<const Matrix<T>> parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw ShapeError("vstack: column counts differ");
    rows += p.rows();
  }
  Matrix<T> out(rows, parts[0].cols());
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    out.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return out;
}

// M^n for square M, n >= 0.
template <typename T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned n) {
  if (!m.is_square()) throw ShapeError("matrix_power: matrix is not square");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace qherglotz
