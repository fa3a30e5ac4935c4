#pragma once

/**
 * @file tensor.hpp
 * @brief Coefficient grids for A⊗A and A⊗A⊗A over a fixed basis.
 *
 * A Tensor2 r = Σ r^{ij} e_i⊗e_j is stored as the matrix (r^{ij}); the slot
 * action (M1⊗M2)r is then the matrix product M1 r M2^T.
 */

#include "matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace zinbiel {

class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(int n) : c_(n, n) {}
  explicit Tensor2(Matrix coeffs) : c_(std::move(coeffs)) {
    if (!c_.is_square()) throw std::invalid_argument("tensor coefficient grid must be square");
  }

  /// e_i ⊗ e_j.
  static Tensor2 basis(int n, int i, int j) {
    Tensor2 t(n);
    t(i, j) = 1;
    return t;
  }
  static Tensor2 outer(const Vector& a, const Vector& b) {
    require_same_size(a, b);
    Tensor2 t(static_cast<int>(a.size()));
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) t(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return t;
  }

  int dim() const { return c_.rows(); }
  const Matrix& matrix() const { return c_; }
  Scalar& operator()(int i, int j) { return c_(i, j); }
  const Scalar& operator()(int i, int j) const { return c_(i, j); }

  bool is_zero() const { return c_.is_zero(); }
  bool is_symmetric() const { return c_ == c_.transpose(); }
  bool is_skew() const { return c_.transpose() == -c_; }

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) { return Tensor2(a.c_ + b.c_); }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return Tensor2(a.c_ - b.c_); }
  friend Tensor2 operator-(const Tensor2& a) { return Tensor2(-a.c_); }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return Tensor2(s * a.c_); }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.c_ == b.c_; }

  std::string to_string() const { return c_.to_string(); }

 private:
  Matrix c_;
};

/// σ(x⊗y) = y⊗x.
inline Tensor2 swap(const Tensor2& t) { return Tensor2(t.matrix().transpose()); }
/// (t − σt)/2.
inline Tensor2 skew_part(const Tensor2& t) { return Scalar::rational(1, 2) * (t - swap(t)); }
/// (t + σt)/2.
inline Tensor2 sym_part(const Tensor2& t) { return Scalar::rational(1, 2) * (t + swap(t)); }

/// Contract a covector into slot 1 (Σ r^{ij} ξ_i e_j) or slot 2 (Σ r^{ij} ξ_j e_i).
inline Vector contract(const Tensor2& t, const Vector& xi, int slot) {
  if (slot == 1) return t.matrix().transpose().apply(xi);
  if (slot == 2) return t.matrix().apply(xi);
  throw std::invalid_argument("tensor slot must be 1 or 2");
}

/// (M1⊗M2) t.
inline Tensor2 apply_slotwise(const Matrix& m1, const Matrix& m2, const Tensor2& t) {
  return Tensor2(m1 * t.matrix() * m2.transpose());
}

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), c_(static_cast<std::size_t>(n * n * n)) {}

  /// t ⊗ v, v in the third slot.
  static Tensor3 append(const Tensor2& t, const Vector& v) {
    Tensor3 out(t.dim());
    for (int i = 0; i < out.n_; ++i)
      for (int j = 0; j < out.n_; ++j) {
        if (t(i, j).is_zero()) continue;
        for (int k = 0; k < out.n_; ++k) out(i, j, k) = t(i, j) * v.at(static_cast<std::size_t>(k));
      }
    return out;
  }

  int dim() const { return n_; }
  Scalar& operator()(int i, int j, int k) { return c_[index(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }

  /// First nonzero component, or nullopt.
  std::optional<std::array<int, 3>> first_nonzero() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (!(*this)(i, j, k).is_zero()) return std::array<int, 3>{i, j, k};
    return std::nullopt;
  }

  /// Number of nonzero components.
  int support() const {
    int s = 0;
    for (const auto& x : c_) s += x.is_zero() ? 0 : 1;
    return s;
  }

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    a.require_same(b);
    Tensor3 out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
  }
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
    a.require_same(b);
    Tensor3 out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
  }
  friend Tensor3 operator-(const Tensor3& a) {
    Tensor3 out = a;
    for (auto& s : out.c_) s = -s;
    return out;
  }
  friend Tensor3 operator*(const Scalar& s, const Tensor3& a) {
    Tensor3 out = a;
    for (auto& x : out.c_) x = s * x;
    return out;
  }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (!(*this)(i, j, k).is_zero())
            out += (out.empty() ? "" : " + ") + (*this)(i, j, k).to_string() + "*e" + std::to_string(i + 1) + "⊗e" +
                   std::to_string(j + 1) + "⊗e" + std::to_string(k + 1);
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_) throw std::out_of_range("tensor index out of range");
    return static_cast<std::size_t>((i * n_ + j) * n_ + k);
  }
  void require_same(const Tensor3& o) const {
    if (n_ != o.n_) throw std::invalid_argument("tensor shape mismatch");
  }

  int n_ = 0;
  std::vector<Scalar> c_;
};

/// (M1⊗M2⊗M3) t, applied one slot at a time.
inline Tensor3 apply_slotwise(const Matrix& m1, const Matrix& m2, const Matrix& m3, const Tensor3& t) {
  int n = t.dim();
  for (const Matrix* m : {&m1, &m2, &m3})
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("slot operator shape mismatch");
  Tensor3 a(n), b(n), c(n);
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& v = t(p, j, k);
        if (v.is_zero()) continue;
        for (int i = 0; i < n; ++i)
          if (!m1(i, p).is_zero()) a(i, j, k) += m1(i, p) * v;
      }
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q)
      for (int k = 0; k < n; ++k) {
        const auto& v = a(i, q, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < n; ++j)
          if (!m2(j, q).is_zero()) b(i, j, k) += m2(j, q) * v;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        const auto& v = b(i, j, s);
        if (v.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!m3(k, s).is_zero()) c(i, j, k) += m3(k, s) * v;
      }
  return c;
}

/// σ⊗Id: swaps the first two slots.
inline Tensor3 swap12(const Tensor3& t) {
  Tensor3 out(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) out(j, i, k) = t(i, j, k);
  return out;
}

}  // namespace zinbiel
