#pragma once

// Dense exact matrices and vectors over Scalar.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hn3/errors.hpp"
#include "hn3/scalar.hpp"

namespace hn3 {

/// Column vector or covector over the fixed basis; which one is meant is
/// fixed by context (xi is a vector, eta a covector).
using Vector = std::vector<Scalar>;

inline Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector +: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector -: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// a ⊗ b as the rank-one matrix a bᵀ, i.e. x ↦ b(x) a.
  static Matrix outer(const Vector& a, const Vector& b) {
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return hn3::is_zero(s); });
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& o) {
    check_same(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("Matrix ") + op + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: a.cols != b.rows");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix * vector: size mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!is_zero(a(i, k)) && !is_zero(v[k])) out[i] += a(i, k) * v[k];
  return out;
}

/// Covector composed with a matrix: (w ∘ a)(x) = w(a x).
inline Vector compose(const Vector& w, const Matrix& a) { return a.transpose() * w; }

/// Bilinear form a evaluated on (x, y): xᵀ a y.
inline Scalar bilinear(const Matrix& a, const Vector& x, const Vector& y) { return dot(x, a * y); }

namespace detail {

// Row-reduces m in place; returns the rank and the determinant sign/product.
inline std::size_t row_reduce(Matrix& m, Scalar* det = nullptr, Matrix* companion = nullptr) {
  std::size_t rank = 0;
  Scalar d = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      if (companion)
        for (std::size_t c = 0; c < companion->cols(); ++c) std::swap((*companion)(pivot, c), (*companion)(rank, c));
      d = -d;
    }
    const Scalar p = m(rank, col);
    d *= p;
    for (std::size_t c = 0; c < m.cols(); ++c) m(rank, c) /= p;
    if (companion)
      for (std::size_t c = 0; c < companion->cols(); ++c) (*companion)(rank, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_zero(m(rank, c))) m(r, c) -= f * m(rank, c);
      if (companion)
        for (std::size_t c = 0; c < companion->cols(); ++c)
          if (!is_zero((*companion)(rank, c))) (*companion)(r, c) -= f * (*companion)(rank, c);
    }
    ++rank;
  }
  if (rank < m.rows() || rank < m.cols()) d = 0;
  if (det) *det = d;
  return rank;
}

}  // namespace detail

inline std::size_t rank(Matrix m) { return detail::row_reduce(m); }

inline Scalar determinant(Matrix m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix is not square");
  Scalar d;
  detail::row_reduce(m, &d);
  return d;
}

inline Matrix mat_inverse(Matrix a) {
  if (!a.is_square()) throw DimensionError("mat_inverse: matrix is not square");
  Matrix inv = Matrix::identity(a.rows());
  if (detail::row_reduce(a, nullptr, &inv) < a.rows()) throw SingularMatrixError("mat_inverse: singular matrix");
  return inv;
}

/// Inertia of a symmetric bilinear form.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
  return os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
}

/// Sylvester inertia by congruence diagonalization. When the active block has
/// a zero diagonal but a nonzero entry a_ij, the congruence e_i ↦ e_i + e_j
/// produces the nonzero pivot 2 a_ij.
inline Signature signature(const Matrix& input) {
  if (!input.is_symmetric()) throw DimensionError("signature: matrix is not symmetric");
  Matrix a = input;
  const std::size_t n = a.rows();
  Signature sig;

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  auto add_index = [&](std::size_t target, std::size_t source) {
    for (std::size_t c = 0; c < n; ++c) a(target, c) += a(source, c);
    for (std::size_t r = 0; r < n; ++r) a(r, target) += a(r, source);
  };

  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(a(pivot, pivot))) ++pivot;
    if (pivot == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!is_zero(a(i, j))) {
            add_index(i, j);
            pivot = i;
            found = true;
          }
      if (!found) {
        sig.zero += n - k;
        break;
      }
    }
    swap_index(pivot, k);
    const Scalar p = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (is_zero(a(j, k))) continue;
      const Scalar f = a(j, k) / p;
      for (std::size_t c = k; c < n; ++c) a(j, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, j) -= f * a(r, k);
    }
    (p > 0 ? sig.positive : sig.negative) += 1;
    ++k;
  }
  return sig;
}

}  // namespace hn3
