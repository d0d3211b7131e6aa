#pragma once

// Dense left-invariant tensors of type (0,s) and (1,s) over a fixed basis.
//
// Slot convention (used everywhere in the library):
//   * covariant argument slots come first, in argument order;
//   * for a (1,s) tensor the output (upper) index is the LAST slot, so
//     t(i, j, k) of a (1,2) tensor is the e_k-component of T(e_i, e_j);
//   * lowering a (1,s) tensor turns that last slot into the last argument,
//     i.e. T(x, y, z) = g(T(x, y), z);
//   * a (1,1) tensor built from a matrix A has t(j, k) = A(k, j), the
//     e_k-component of A e_j.
// Indices are 0-based in code and 1-based in every printed form.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hn3/errors.hpp"
#include "hn3/matrix.hpp"
#include "hn3/scalar.hpp"

namespace hn3 {

using Index = std::vector<std::size_t>;

class Tensor {
 public:
  Tensor() = default;

  /// Zero tensor of type (upper, lower) on a dim-dimensional space.
  Tensor(std::size_t dim, std::size_t upper, std::size_t lower) : dim_(dim), upper_(upper), lower_(lower) {
    if (upper > 1) throw DimensionError("Tensor: only (0,s) and (1,s) tensors are supported");
    if (dim == 0) throw DimensionError("Tensor: dimension must be positive");
    std::size_t count = 1;
    for (std::size_t r = 0; r < rank(); ++r) count *= dim;
    data_.assign(count, Scalar(0));
  }

  static Tensor covariant(std::size_t dim, std::size_t lower) { return Tensor(dim, 0, lower); }
  static Tensor mixed(std::size_t dim, std::size_t lower) { return Tensor(dim, 1, lower); }

  /// (1,1) tensor of the endomorphism a (see slot convention above).
  static Tensor from_endomorphism(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("from_endomorphism: matrix is not square");
    Tensor t(a.rows(), 1, 1);
    for (std::size_t j = 0; j < a.rows(); ++j)
      for (std::size_t k = 0; k < a.rows(); ++k) t(j, k) = a(k, j);
    return t;
  }

  /// (0,2) tensor of the bilinear form a: t(i, j) = a(i, j).
  static Tensor from_bilinear_form(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("from_bilinear_form: matrix is not square");
    Tensor t(a.rows(), 0, 2);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) t(i, j) = a(i, j);
    return t;
  }

  static Tensor from_covector(const Vector& w) {
    Tensor t(w.size(), 0, 1);
    for (std::size_t i = 0; i < w.size(); ++i) t(i) = w[i];
    return t;
  }

  static Tensor from_vector(const Vector& v) {
    Tensor t(v.size(), 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) t(i) = v[i];
    return t;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t upper() const noexcept { return upper_; }
  std::size_t lower() const noexcept { return lower_; }
  std::size_t rank() const noexcept { return upper_ + lower_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool has_valence(std::size_t upper, std::size_t lower) const noexcept {
    return upper_ == upper && lower_ == lower;
  }

  Scalar& flat(std::size_t n) { return data_[n]; }
  const Scalar& flat(std::size_t n) const { return data_[n]; }

  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != rank()) throw DimensionError("Tensor: wrong number of indices");
    std::size_t n = 0;
    for (std::size_t i : idx) {
      if (i >= dim_) throw DimensionError("Tensor: index out of range");
      n = n * dim_ + i;
    }
    return n;
  }

  /// Inverse of offset().
  Index index_of(std::size_t n) const {
    Index idx(rank());
    for (std::size_t r = rank(); r-- > 0;) {
      idx[r] = n % dim_;
      n /= dim_;
    }
    return idx;
  }

  Scalar& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }
  const Scalar& at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }

  template <typename... I>
  Scalar& operator()(I... i) {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(i)...};
    return at(idx);
  }
  template <typename... I>
  const Scalar& operator()(I... i) const {
    const std::array<std::size_t, sizeof...(I)> idx{static_cast<std::size_t>(i)...};
    return at(idx);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return hn3::is_zero(s); });
  }

  /// Nonzero components in lexicographic index order.
  std::vector<std::pair<Index, Scalar>> nonzero() const {
    std::vector<std::pair<Index, Scalar>> out;
    for (std::size_t n = 0; n < data_.size(); ++n)
      if (!hn3::is_zero(data_[n])) out.emplace_back(index_of(n), data_[n]);
    return out;
  }

  /// (1,1) tensor back to its matrix; (0,2) tensor to its Gram matrix.
  Matrix to_matrix() const {
    if (rank() != 2) throw DimensionError("to_matrix: rank must be 2");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        if (upper_ == 1)
          m(j, i) = (*this)(i, j);
        else
          m(i, j) = (*this)(i, j);
      }
    return m;
  }

  /// Components of a (1,0) or (0,1) tensor.
  Vector to_vector() const {
    if (rank() != 1) throw DimensionError("to_vector: rank must be 1");
    return data_;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

  Tensor& operator+=(const Tensor& o) {
    check_same(o, "+");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += o.data_[n];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_same(o, "-");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= o.data_[n];
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }

 private:
  void check_same(const Tensor& o, const char* op) const {
    if (dim_ != o.dim_ || upper_ != o.upper_ || lower_ != o.lower_)
      throw DimensionError(std::string("Tensor ") + op + ": valence or dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::size_t upper_ = 0;
  std::size_t lower_ = 0;
  std::vector<Scalar> data_;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace detail

/// out(i_1..i_s, k) = Σ_m g(m, k) t(i_1..i_s, m).
inline Tensor lower(const Tensor& t, const Matrix& g) {
  detail::require(t.upper() == 1, "lower: tensor has no upper index");
  detail::require(g.is_square() && g.rows() == t.dim(), "lower: metric dimension mismatch");
  if (!g.is_symmetric()) throw DimensionError("lower: metric is not symmetric");
  if (is_zero(determinant(g))) throw SingularMatrixError("lower: metric is degenerate");
  const std::size_t n = t.dim();
  Tensor out = Tensor::covariant(n, t.lower() + 1);
  for (std::size_t base = 0; base < t.size(); base += n)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& v = t.flat(base + m);
      if (is_zero(v)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g(m, k))) out.flat(base + k) += g(m, k) * v;
    }
  return out;
}

/// Inverse of lower(): the last covariant slot becomes the output index,
/// out(i.., k) = Σ_m g_inv(k, m) t(i.., m).
inline Tensor raise_last(const Tensor& t, const Matrix& g_inv) {
  detail::require(t.upper() == 0 && t.lower() >= 1, "raise_last: need a covariant tensor");
  detail::require(g_inv.is_square() && g_inv.rows() == t.dim(), "raise_last: dimension mismatch");
  const std::size_t n = t.dim();
  Tensor out = Tensor::mixed(n, t.lower() - 1);
  for (std::size_t base = 0; base < t.size(); base += n)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& v = t.flat(base + m);
      if (is_zero(v)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g_inv(k, m))) out.flat(base + k) += g_inv(k, m) * v;
    }
  return out;
}

/// Reorders covariant slots: out(i_0, .., i_{r-1}) = t(i_{p[0]}, .., i_{p[r-1]}).
/// For a (1,s) tensor `perm` acts on the s argument slots and the output
/// index stays last.
inline Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
  detail::require(perm.size() == t.lower(), "permute: permutation length != covariant rank");
  Tensor out(t.dim(), t.upper(), t.lower());
  Index src(t.rank());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const Index idx = out.index_of(n);
    for (std::size_t r = 0; r < perm.size(); ++r) src[r] = idx[perm[r]];
    if (t.upper() == 1) src.back() = idx.back();
    out.flat(n) = t.at(src);
  }
  return out;
}

inline Tensor permute(const Tensor& t, std::initializer_list<std::size_t> perm) {
  return permute(t, std::span<const std::size_t>(perm.begin(), perm.size()));
}

/// Substitutes a x for the argument in `slot`: out(.., x, ..) = t(.., a x, ..).
inline Tensor precompose(const Tensor& t, std::size_t slot, const Matrix& a) {
  detail::require(slot < t.lower(), "precompose: slot is not a covariant slot");
  detail::require(a.is_square() && a.rows() == t.dim(), "precompose: dimension mismatch");
  Tensor out(t.dim(), t.upper(), t.lower());
  for (std::size_t n = 0; n < t.size(); ++n) {
    const Scalar& v = t.flat(n);
    if (is_zero(v)) continue;
    Index idx = t.index_of(n);
    const std::size_t m = idx[slot];
    for (std::size_t i = 0; i < t.dim(); ++i) {
      if (is_zero(a(m, i))) continue;
      idx[slot] = i;
      out.at(idx) += v * a(m, i);
    }
  }
  return out;
}

/// Applies a to the output: out(..) = a (t(..)).
inline Tensor postcompose(const Matrix& a, const Tensor& t) {
  detail::require(t.upper() == 1, "postcompose: tensor has no output index");
  detail::require(a.is_square() && a.rows() == t.dim(), "postcompose: dimension mismatch");
  const std::size_t n = t.dim();
  Tensor out(t.dim(), 1, t.lower());
  for (std::size_t base = 0; base < t.size(); base += n)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& v = t.flat(base + m);
      if (is_zero(v)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(a(k, m))) out.flat(base + k) += a(k, m) * v;
    }
  return out;
}

/// Inserts v into covariant `slot`, removing it.
inline Tensor contract_slot(const Tensor& t, std::size_t slot, const Vector& v) {
  detail::require(slot < t.lower(), "contract_slot: slot is not a covariant slot");
  detail::require(v.size() == t.dim(), "contract_slot: dimension mismatch");
  Tensor out(t.dim(), t.upper(), t.lower() - 1);
  for (std::size_t n = 0; n < t.size(); ++n) {
    const Scalar& c = t.flat(n);
    if (is_zero(c)) continue;
    Index idx = t.index_of(n);
    const Scalar& w = v[idx[slot]];
    if (is_zero(w)) continue;
    idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(slot));
    out.at(idx) += c * w;
  }
  return out;
}

/// Interior product v ⌟ t: v goes into the first argument.
inline Tensor interior(const Vector& v, const Tensor& t) { return contract_slot(t, 0, v); }

/// Tensor product of covariant tensors, or of a vector (1,0) with a covariant
/// tensor, which yields the (1,s) tensor x.. ↦ b(x..) a.
inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
  detail::require(a.dim() == b.dim(), "tensor_product: dimension mismatch");
  detail::require(b.upper() == 0, "tensor_product: right factor must be covariant");
  if (a.upper() == 1) {
    detail::require(a.lower() == 0, "tensor_product: left factor must be a vector or covariant");
    Tensor out = Tensor::mixed(a.dim(), b.lower());
    for (std::size_t n = 0; n < b.size(); ++n) {
      if (is_zero(b.flat(n))) continue;
      for (std::size_t k = 0; k < a.dim(); ++k) out.flat(n * a.dim() + k) = b.flat(n) * a.flat(k);
    }
    return out;
  }
  Tensor out = Tensor::covariant(a.dim(), a.lower() + b.lower());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a.flat(i))) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out.flat(i * b.size() + j) = a.flat(i) * b.flat(j);
  }
  return out;
}

/// 𝔖: out(x, y, z) = t(x, y, z) + t(y, z, x) + t(z, x, y).
inline Tensor cyclic_sum(const Tensor& t) {
  detail::require(t.has_valence(0, 3), "cyclic_sum: need a (0,3) tensor");
  return t + permute(t, {1, 2, 0}) + permute(t, {2, 0, 1});
}

/// Full antisymmetrization (1/6) Σ_σ sgn(σ) t∘σ.
inline Tensor alternation(const Tensor& t) {
  detail::require(t.has_valence(0, 3), "alternation: need a (0,3) tensor");
  Tensor even = cyclic_sum(t);
  Tensor odd = cyclic_sum(permute(t, {1, 0, 2}));
  return Scalar(1, 6) * (even - odd);
}

inline bool is_antisymmetric_in(const Tensor& t, std::size_t a, std::size_t b) {
  detail::require(a < t.lower() && b < t.lower(), "is_antisymmetric_in: slot out of range");
  Index swapped;
  for (std::size_t n = 0; n < t.size(); ++n) {
    swapped = t.index_of(n);
    std::swap(swapped[a], swapped[b]);
    if (t.flat(n) != -t.at(swapped)) return false;
  }
  return true;
}

inline bool is_symmetric_in(const Tensor& t, std::size_t a, std::size_t b) {
  detail::require(a < t.lower() && b < t.lower(), "is_symmetric_in: slot out of range");
  Index swapped;
  for (std::size_t n = 0; n < t.size(); ++n) {
    swapped = t.index_of(n);
    std::swap(swapped[a], swapped[b]);
    if (t.flat(n) != t.at(swapped)) return false;
  }
  return true;
}

/// True iff t is totally antisymmetric.
inline bool is_three_form(const Tensor& t) {
  detail::require(t.has_valence(0, 3), "is_three_form: need a (0,3) tensor");
  return is_antisymmetric_in(t, 0, 1) && is_antisymmetric_in(t, 1, 2) && is_antisymmetric_in(t, 0, 2);
}

/// η ∧ ω := 𝔖(η ⊗ ω), with no combinatorial prefactor.
inline Tensor wedge_1_2(const Tensor& eta, const Tensor& omega) {
  detail::require(eta.has_valence(0, 1), "wedge_1_2: first factor must be a 1-form");
  detail::require(omega.has_valence(0, 2), "wedge_1_2: second factor must be a (0,2) tensor");
  if (!is_antisymmetric_in(omega, 0, 1)) throw DimensionError("wedge_1_2: second factor is not antisymmetric");
  return cyclic_sum(tensor_product(eta, omega));
}

/// Multilinear evaluation on arbitrary vectors. For a (1,s) tensor the
/// result is the output vector; for a covariant tensor it has one entry.
inline Vector evaluate(const Tensor& t, std::span<const Vector> args) {
  detail::require(args.size() == t.lower(), "evaluate: wrong number of arguments");
  for (const auto& a : args) detail::require(a.size() == t.dim(), "evaluate: dimension mismatch");
  Vector out(t.upper() == 1 ? t.dim() : 1);
  for (std::size_t n = 0; n < t.size(); ++n) {
    const Scalar& c = t.flat(n);
    if (is_zero(c)) continue;
    const Index idx = t.index_of(n);
    Scalar w = c;
    for (std::size_t r = 0; r < args.size() && !is_zero(w); ++r) w *= args[r][idx[r]];
    if (is_zero(w)) continue;
    out[t.upper() == 1 ? idx.back() : 0] += w;
  }
  return out;
}

inline Scalar evaluate_form(const Tensor& t, std::initializer_list<Vector> args) {
  detail::require(t.upper() == 0, "evaluate_form: tensor is not covariant");
  return evaluate(t, std::span<const Vector>(args.begin(), args.size())).front();
}

inline Vector evaluate_map(const Tensor& t, std::initializer_list<Vector> args) {
  detail::require(t.upper() == 1, "evaluate_map: tensor has no output index");
  return evaluate(t, std::span<const Vector>(args.begin(), args.size()));
}

/// 1-based rendering of an index tuple: "[1,2,7]".
inline std::string format_index(const Index& idx) {
  std::string s = "[";
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r) s += ",";
    s += std::to_string(idx[r] + 1);
  }
  return s + "]";
}

/// One "name[i,j,k] = p/q" line per nonzero component, sorted by index.
inline std::string format_components(const std::string& name, const Tensor& t) {
  std::ostringstream os;
  for (const auto& [idx, value] : t.nonzero()) os << name << format_index(idx) << " = " << to_string(value) << "\n";
  return os.str();
}

}  // namespace hn3
