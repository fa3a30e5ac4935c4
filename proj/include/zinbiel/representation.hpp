#pragma once

/**
 * @file representation.hpp
 * @brief Representations (ρ, μ) of Zinbiel algebras, their duals and
 * semidirect products; representations ζ of commutative associative algebras.
 *
 * Operators are stored per basis element of the base algebra and extended
 * linearly. The dual space carries the dual basis, so starred operators are
 * transposes with the sign ρ*(x) = −ρ(x)^T.
 */

#include "algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

namespace detail {

inline void require_family(const std::vector<Matrix>& ops, int count, int m, const char* what) {
  if (static_cast<int>(ops.size()) != count) throw std::invalid_argument(std::string(what) + ": expected one operator per basis element");
  for (const auto& op : ops)
    if (op.rows() != m || op.cols() != m) throw std::invalid_argument(std::string(what) + ": operator has wrong shape");
}

inline Matrix combine(const std::vector<Matrix>& ops, const Vector& x, int m) {
  if (x.size() != ops.size()) throw std::invalid_argument("dimension mismatch in operator family");
  Matrix out(m, m);
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (!x[i].is_zero()) out = out + x[i] * ops[i];
  return out;
}

inline std::vector<Matrix> transposed(const std::vector<Matrix>& ops, const Scalar& sign) {
  std::vector<Matrix> out;
  for (const auto& op : ops) out.push_back(sign * op.transpose());
  return out;
}

inline std::string matrices(const Matrix& lhs, const Matrix& rhs) { return "lhs " + lhs.to_string() + ", rhs " + rhs.to_string(); }

}  // namespace detail

class Representation {
 public:
  Representation() = default;
  Representation(Algebra base, int space_dim, std::vector<Matrix> rho, std::vector<Matrix> mu)
      : base_(std::move(base)), m_(space_dim), rho_(std::move(rho)), mu_(std::move(mu)) {
    if (m_ < 0) throw std::invalid_argument("negative representation dimension");
    detail::require_family(rho_, base_.dim(), m_, "rho");
    detail::require_family(mu_, base_.dim(), m_, "mu");
  }

  const Algebra& base() const { return base_; }
  int space_dim() const { return m_; }
  const std::vector<Matrix>& rho_family() const { return rho_; }
  const std::vector<Matrix>& mu_family() const { return mu_; }
  const Matrix& rho_basis(int i) const { return rho_.at(static_cast<std::size_t>(i)); }
  const Matrix& mu_basis(int i) const { return mu_.at(static_cast<std::size_t>(i)); }

  Matrix rho(const Vector& x) const { return detail::combine(rho_, x, m_); }
  Matrix mu(const Vector& x) const { return detail::combine(mu_, x, m_); }

  Representation with_rho(int i, Matrix op) const {
    auto copy = *this;
    copy.rho_.at(static_cast<std::size_t>(i)) = std::move(op);
    detail::require_family(copy.rho_, base_.dim(), m_, "rho");
    return copy;
  }
  Representation with_mu(int i, Matrix op) const {
    auto copy = *this;
    copy.mu_.at(static_cast<std::size_t>(i)) = std::move(op);
    detail::require_family(copy.mu_, base_.dim(), m_, "mu");
    return copy;
  }

 private:
  Algebra base_;
  int m_ = 0;
  std::vector<Matrix> rho_, mu_;
};

/// (A; L, R).
inline Representation regular_representation(const Algebra& a) {
  std::vector<Matrix> l, r;
  for (int i = 0; i < a.dim(); ++i) {
    l.push_back(a.left_basis(i));
    r.push_back(a.right_basis(i));
  }
  return Representation(a, a.dim(), std::move(l), std::move(r));
}

inline Report check_representation(const Representation& v) {
  const auto& a = v.base();
  Report rep("representation axioms over " + a.name());
  int n = a.dim();
  auto pairs = [&](std::string name, auto&& sides) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto [lhs, rhs] = sides(i, j);
        if (!(lhs == rhs)) {
          rep.fail(std::move(name), {i, j}, detail::matrices(lhs, rhs));
          return;
        }
      }
    rep.pass(std::move(name));
  };
  pairs("rho(x)rho(y) = rho(x∘y) + rho(y∘x)", [&](int i, int j) {
    auto xy = a.basis_product(i, j) + a.basis_product(j, i);
    return std::pair{v.rho_basis(i) * v.rho_basis(j), v.rho(xy)};
  });
  pairs("rho(x)mu(y) = mu(x∘y)", [&](int i, int j) {
    return std::pair{v.rho_basis(i) * v.mu_basis(j), v.mu(a.basis_product(i, j))};
  });
  pairs("mu(x∘y) = mu(y)rho(x) + mu(y)mu(x)", [&](int i, int j) {
    return std::pair{v.mu(a.basis_product(i, j)), v.mu_basis(j) * v.rho_basis(i) + v.mu_basis(j) * v.mu_basis(i)};
  });
  return rep;
}

/// (V*; −ρ*−μ*, μ*) with ρ*(x) = −ρ(x)^T, i.e. (ρ^T + μ^T, −μ^T).
inline Representation dual_representation(const Representation& v) {
  auto rep = check_representation(v);
  if (!rep.passed()) throw std::invalid_argument("dual_representation requires a valid representation:\n" + rep.to_text());
  std::vector<Matrix> rho, mu;
  for (int i = 0; i < v.base().dim(); ++i) {
    rho.push_back(v.rho_basis(i).transpose() + v.mu_basis(i).transpose());
    mu.push_back(-v.mu_basis(i).transpose());
  }
  return Representation(v.base(), v.space_dim(), std::move(rho), std::move(mu));
}

/// (A*; −L*−R*, R*).
inline Representation coregular_representation(const Algebra& a) { return dual_representation(regular_representation(a)); }

/// A ⋉_{ρ,μ} V on A ⊕ V: (x+u)∘(y+v) = x∘y + ρ(x)v + μ(y)u.
inline Algebra semidirect_product(const Representation& v) {
  const auto& a = v.base();
  int n = a.dim(), m = v.space_dim();
  return Algebra::from_products(a.name() + "⋉V", n + m, a.field(), [&](int i, int j) {
    Vector out(static_cast<std::size_t>(n + m));
    if (i < n && j < n) {
      auto p = a.basis_product(i, j);
      std::copy(p.begin(), p.end(), out.begin());
    } else if (i < n && j >= n) {
      auto col = v.rho_basis(i).column(j - n);
      std::copy(col.begin(), col.end(), out.begin() + n);
    } else if (i >= n && j < n) {
      auto col = v.mu_basis(j).column(i - n);
      std::copy(col.begin(), col.end(), out.begin() + n);
    }
    return out;
  });
}

// --- commutative associative side --------------------------------------------

class CommRepresentation {
 public:
  CommRepresentation() = default;
  CommRepresentation(Algebra base, int space_dim, std::vector<Matrix> zeta)
      : base_(std::move(base)), m_(space_dim), zeta_(std::move(zeta)) {
    detail::require_family(zeta_, base_.dim(), m_, "zeta");
  }

  const Algebra& base() const { return base_; }
  int space_dim() const { return m_; }
  const std::vector<Matrix>& zeta_family() const { return zeta_; }
  const Matrix& zeta_basis(int i) const { return zeta_.at(static_cast<std::size_t>(i)); }
  Matrix zeta(const Vector& x) const { return detail::combine(zeta_, x, m_); }

  CommRepresentation with_zeta(int i, Matrix op) const {
    auto copy = *this;
    copy.zeta_.at(static_cast<std::size_t>(i)) = std::move(op);
    detail::require_family(copy.zeta_, base_.dim(), m_, "zeta");
    return copy;
  }

 private:
  Algebra base_;
  int m_ = 0;
  std::vector<Matrix> zeta_;
};

inline Report check_comm_representation(const CommRepresentation& w) {
  const auto& b = w.base();
  Report rep("commutative representation axiom over " + b.name());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      auto lhs = w.zeta(b.basis_product(i, j));
      auto rhs = w.zeta_basis(i) * w.zeta_basis(j);
      if (!(lhs == rhs)) {
        rep.fail("zeta(x*y) = zeta(x)zeta(y)", {i, j}, detail::matrices(lhs, rhs));
        return rep;
      }
    }
  rep.pass("zeta(x*y) = zeta(x)zeta(y)");
  return rep;
}

}  // namespace zinbiel
