#pragma once

/**
 * @file yang_baxter.hpp
 * @brief Coboundary bialgebras, the Yang-Baxter bracket ⟦r,r⟧, invariance,
 * the quasi-triangular / triangular / factorizable classification, the
 * products ·_r, ·₊, ·₋ on A*, relative Rota-Baxter operators and
 * factorization.
 *
 * For r = Σ r^{ij} e_i⊗e_j:
 *   r₊(ξ) = Σ r^{ij} ξ_i e_j   (matrix r^T),
 *   r₋(η) = Σ r^{ij} η_j e_i   (matrix r),
 *   I = r₊ − r₋.
 * Starred operators carry a sign: L*_x = −L_x^T.
 */

#include "bialgebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

/// α(e_i) = (Id⊗(L+R)_{e_i} − L_{e_i}⊗Id) r for each basis vector.
inline std::vector<Tensor2> coboundary_alpha(const Algebra& a, const Tensor2& r) {
  std::vector<Tensor2> out;
  for (int i = 0; i < a.dim(); ++i) {
    auto l = a.left_basis(i), rr = a.right_basis(i);
    out.push_back(apply_slotwise(a.identity(), l + rr, r) - apply_slotwise(l, a.identity(), r));
  }
  return out;
}

/// The product on A* dual to a cobracket: e_a*·e_b* = Σ_k α(e_k)^{ab} e_k*.
inline Algebra dual_product_of(const std::vector<Tensor2>& alpha, FieldSpec field, std::string name = "A*") {
  int n = static_cast<int>(alpha.size());
  return Algebra::from_products(std::move(name), n, field, [&](int a, int b) {
    Vector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = alpha[static_cast<std::size_t>(k)](a, b);
    return v;
  });
}

/// J_α(x) = (Id⊗α)α(x) − (α⊗Id)α(x) − (σ⊗Id)(α⊗Id)α(x), one tensor per basis x.
inline std::vector<Tensor3> J_alpha(const std::vector<Tensor2>& alpha) {
  int n = static_cast<int>(alpha.size());
  std::vector<Tensor3> out;
  for (int x = 0; x < n; ++x) {
    const auto& ax = alpha[static_cast<std::size_t>(x)];
    Tensor3 id_a(n), a_id(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto& c = ax(a, b);
        if (c.is_zero()) continue;
        const auto& ab = alpha[static_cast<std::size_t>(b)];
        const auto& aa = alpha[static_cast<std::size_t>(a)];
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            if (!ab(p, q).is_zero()) id_a(a, p, q) += c * ab(p, q);
            if (!aa(p, q).is_zero()) a_id(p, q, b) += c * aa(p, q);
          }
      }
    out.push_back(id_a - a_id - swap12(a_id));
  }
  return out;
}

namespace detail {

/// Dense copy of the structure constants, c[(i*n+j)*n+k].
inline std::vector<Scalar> dense_constants(const Algebra& a) {
  int n = a.dim();
  std::vector<Scalar> c(static_cast<std::size_t>(n * n * n), a.field().make(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : a.terms(i, j)) c[static_cast<std::size_t>((i * n + j) * n + t.index)] = t.coeff;
  return c;
}

/// ⟦r,r⟧ with an explicit choice for the order inside r₂₃∘r₂₁ (see tests).
inline Tensor3 zybe_bracket_with(const Algebra& A, const Tensor2& r, bool literal_r23_r21) {
  int n = A.dim();
  if (r.dim() != n) throw std::invalid_argument("tensor and algebra dimensions differ");
  auto c = dense_constants(A);
  auto C = [&](int i, int j, int k) -> const Scalar& { return c[static_cast<std::size_t>((i * n + j) * n + k)]; };
  auto S = [&](int i, int j, int k) { return C(i, j, k) + C(j, i, k); };
  Tensor3 out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (r(p, q).is_zero()) continue;
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          if (r(s, t).is_zero()) continue;
          Scalar w = r(p, q) * r(s, t);
          for (int m = 0; m < n; ++m) {
            // −r₁₃∘r₁₂ − r₂₃∘r₂₁ + r₁₃∗r₂₁ + r₁₂∗r₂₃ − r₁₃∗r₂₃
            if (!C(p, s, m).is_zero()) out(m, t, q) -= w * C(p, s, m);
            const auto& t2 = literal_r23_r21 ? C(s, p, m) : C(p, s, m);
            if (!t2.is_zero()) out(t, m, q) -= w * t2;
            auto t3 = S(p, t, m);
            if (!t3.is_zero()) out(m, s, q) += w * t3;
            auto t4 = S(q, s, m);
            if (!t4.is_zero()) out(p, m, t) += w * t4;
            auto t5 = S(q, t, m);
            if (!t5.is_zero()) out(p, s, m) -= w * t5;
          }
        }
    }
  return out;
}

}  // namespace detail

/// ⟦r,r⟧ = −r₁₃∘r₁₂ − r₂₃∘r₂₁ + r₁₃∗r₂₁ + r₁₂∗r₂₃ − r₁₃∗r₂₃, where with
/// r = Σ a_i⊗b_i:
///   r₁₃∘r₁₂ = Σ a_i∘a_j ⊗ b_j ⊗ b_i,   r₂₃∘r₂₁ = Σ b_j ⊗ a_i∘a_j ⊗ b_i,
///   r₁₃∗r₂₁ = Σ a_i∗b_j ⊗ a_j ⊗ b_i,   r₁₂∗r₂₃ = Σ a_i ⊗ b_i∗a_j ⊗ b_j,
///   r₁₃∗r₂₃ = Σ a_i ⊗ a_j ⊗ b_i∗b_j.
inline Tensor3 zybe_bracket(const Algebra& A, const Tensor2& r) { return detail::zybe_bracket_with(A, r, false); }

/// H(x) = L_x⊗Id⊗Id − Id⊗Id⊗(L_x+R_x).
inline Tensor3 apply_H(const Algebra& A, const Vector& x, const Tensor3& t) {
  auto l = A.left(x), id = A.identity();
  return apply_slotwise(l, id, id, t) - apply_slotwise(id, id, l + A.right(x), t);
}

/// (L_{x∘y}⊗Id − Id⊗L_{x∘y} − L_xL_y⊗Id + L_x⊗L_y) t.
inline Tensor2 coboundary_operator(const Algebra& A, const Vector& x, const Vector& y, const Tensor2& t) {
  auto lxy = A.left(A.product(x, y));
  auto lx = A.left(x), ly = A.left(y);
  const auto& m = t.matrix();
  return Tensor2(lxy * m - m * lxy.transpose() - lx * ly * m + lx * m * ly.transpose());
}

/// Σ_{pq} r^{pq} (coboundary operator at (x, e_p))(r − σr) ⊗ e_q.
inline Tensor3 zybe_correction(const Algebra& A, const Vector& x, const Tensor2& r) {
  int n = A.dim();
  Tensor3 out(n);
  auto diff = r - swap(r);
  for (int p = 0; p < n; ++p) {
    bool any = false;
    for (int q = 0; q < n; ++q) any = any || !r(p, q).is_zero();
    if (!any) continue;
    auto m = coboundary_operator(A, x, A.basis(p), diff);
    for (int q = 0; q < n; ++q)
      if (!r(p, q).is_zero()) out = out + r(p, q) * Tensor3::append(m, A.basis(q));
  }
  return out;
}

/// ⟦r,r⟧ contracted with ξ in slot 1 and η in slot 3.
inline Vector contract13(const Tensor3& t, const Vector& xi, const Vector& eta) {
  int n = t.dim();
  Vector out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out[static_cast<std::size_t>(j)] += t(i, j, k) * xi.at(static_cast<std::size_t>(i)) * eta.at(static_cast<std::size_t>(k));
  return out;
}

// --- products on A* --------------------------------------------------------------

/// ξ·_r η = −(L*+R*)_{r₊ξ} η + R*_{r₋η} ξ.
inline Algebra product_r(const Algebra& A, const Tensor2& r, std::string name = "A*_r") {
  Matrix rp = r.matrix().transpose(), rm = r.matrix();
  return Algebra::from_products(std::move(name), A.dim(), A.field(), [&](int a, int b) {
    auto xi = A.basis(a), eta = A.basis(b);
    auto x = rp.apply(xi), y = rm.apply(eta);
    return (A.left(x) + A.right(x)).transpose().apply(eta) - A.right(y).transpose().apply(xi);
  });
}

/// ξ·₊η = R*_{Iη} ξ.
inline Algebra product_plus(const Algebra& A, const Matrix& I, std::string name = "A*_+") {
  return Algebra::from_products(std::move(name), A.dim(), A.field(), [&](int a, int b) {
    return -A.right(I.apply(A.basis(b))).transpose().apply(A.basis(a));
  });
}

/// ξ·₋η = L*_{Iξ}η + R*_{Iξ}η.
inline Algebra product_minus(const Algebra& A, const Matrix& I, std::string name = "A*_-") {
  return Algebra::from_products(std::move(name), A.dim(), A.field(), [&](int a, int b) {
    auto x = I.apply(A.basis(a));
    return -(A.left(x) + A.right(x)).transpose().apply(A.basis(b));
  });
}

// --- invariance --------------------------------------------------------------------

/// (L_x⊗Id − Id⊗(L_x+R_x)) t = 0 for all x; for skew t also the two
/// operator reformulations t₊∘L*_x + (L_x+R_x)∘t₊ = 0 and I∘L*_x = −(L_x+R_x)∘I.
inline Report check_LLR_invariance(const Algebra& A, const Tensor2& t) {
  Report rep("(L, L+R)-invariance on " + A.name());
  auto per_basis = [&](std::string name, auto&& residual) {
    for (int i = 0; i < A.dim(); ++i) {
      Matrix m = residual(A.left_basis(i), A.right_basis(i));
      if (!m.is_zero()) {
        rep.fail(std::move(name), {i}, "residual " + m.to_string());
        return;
      }
    }
    rep.pass(std::move(name));
  };
  const auto& tm = t.matrix();
  per_basis("tensor form (L_x⊗Id − Id⊗(L_x+R_x))t = 0",
            [&](const Matrix& l, const Matrix& r) { return l * tm - tm * (l + r).transpose(); });
  if (t.is_skew()) {
    Matrix tp = tm.transpose();
    Matrix I = tp - tm;
    per_basis("operator form t₊L*_x + (L_x+R_x)t₊ = 0",
              [&](const Matrix& l, const Matrix& r) { return tp * (-l.transpose()) + (l + r) * tp; });
    per_basis("operator form I L*_x + (L_x+R_x) I = 0",
              [&](const Matrix& l, const Matrix& r) { return I * (-l.transpose()) + (l + r) * I; });
  }
  return rep;
}

// --- r-matrices ----------------------------------------------------------------------

enum class RClass { coboundary, quasi_triangular, triangular, factorizable };

inline std::string to_string(RClass c) {
  switch (c) {
    case RClass::coboundary: return "coboundary";
    case RClass::quasi_triangular: return "quasi-triangular";
    case RClass::triangular: return "triangular";
    case RClass::factorizable: return "factorizable";
  }
  return "coboundary";
}

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(Algebra base, Tensor2 r) : base_(std::move(base)), r_(std::move(r)) {
    if (r_.dim() != base_.dim()) throw std::invalid_argument("tensor and algebra dimensions differ");
    r_plus_ = r_.matrix().transpose();
    r_minus_ = r_.matrix();
    I_ = r_plus_ - r_minus_;
    a_ = skew_part(r_);
    lambda_ = sym_part(r_);
    bracket_ = zybe_bracket(base_, r_);
  }

  const Algebra& base() const { return base_; }
  const Tensor2& r() const { return r_; }
  const Matrix& r_plus() const { return r_plus_; }
  const Matrix& r_minus() const { return r_minus_; }
  const Matrix& I() const { return I_; }
  const Tensor2& skew() const { return a_; }
  const Tensor2& sym() const { return lambda_; }
  const Tensor3& bracket() const { return bracket_; }

  bool solves_zybe() const { return bracket_.is_zero(); }
  bool I_invertible() const { return is_invertible(I_); }

 private:
  Algebra base_;
  Tensor2 r_;
  Matrix r_plus_, r_minus_, I_;
  Tensor2 a_, lambda_;
  Tensor3 bracket_;
};

inline constexpr const char* kSkewPartClause =
    "skew part condition (L_{x∘y}⊗Id − Id⊗L_{x∘y} − L_xL_y⊗Id + L_x⊗L_y)(a) = 0";
inline constexpr const char* kBracketClause = "H(x)⟦r,r⟧ = 0";

struct CoboundaryResult {
  Report report;
  std::optional<Bialgebra> bialgebra;
};

/// Conditions (skew part) and (H(x)⟦r,r⟧ = 0) making (A, A*_r) a bialgebra.
inline CoboundaryResult check_coboundary_bialgebra(const Algebra& A, const Tensor2& r) {
  Report rep("coboundary bialgebra on " + A.name());
  rep.merge(check_zinbiel(A), "A");
  auto a = skew_part(r);
  Clause first{kSkewPartClause, true, {}, {}};
  for (int i = 0; i < A.dim() && first.passed; ++i)
    for (int j = 0; j < A.dim() && first.passed; ++j) {
      auto t = coboundary_operator(A, A.basis(i), A.basis(j), a);
      if (!t.is_zero()) first = {first.name, false, {i, j}, "residual " + t.to_string()};
    }
  rep.add(std::move(first));
  auto bracket = zybe_bracket(A, r);
  Clause second{kBracketClause, true, {}, {}};
  for (int i = 0; i < A.dim() && second.passed; ++i) {
    auto t = apply_H(A, A.basis(i), bracket);
    if (!t.is_zero()) second = {second.name, false, {i}, "H(x)⟦r,r⟧ = " + t.to_string()};
  }
  rep.add(std::move(second));
  CoboundaryResult out{rep, std::nullopt};
  if (rep.passed()) out.bialgebra = Bialgebra(A, product_r(A, r, A.name() + "*_r"), A.name() + " coboundary");
  return out;
}

/// Classification of a coboundary r; throws if the coboundary conditions fail.
inline RClass classify(const RMatrix& R) {
  auto cb = check_coboundary_bialgebra(R.base(), R.r());
  if (!cb.report.passed()) throw std::invalid_argument("classify requires a coboundary bialgebra:\n" + cb.report.to_text());
  if (!R.solves_zybe() || !check_LLR_invariance(R.base(), R.skew()).passed()) return RClass::coboundary;
  if (R.r().is_symmetric()) return RClass::triangular;
  if (R.I_invertible()) return RClass::factorizable;
  return RClass::quasi_triangular;
}

// --- actions and relative Rota-Baxter operators ----------------------------------------

/// An action of `acting` on the algebra `acted` through (ρ, μ).
struct ActionData {
  Representation rep;  ///< base = acting algebra, space = acted algebra
  Algebra acted;
};

inline Report check_action(const ActionData& d) {
  const auto& A = d.rep.base();
  const auto& B = d.acted;
  if (B.dim() != d.rep.space_dim()) throw std::invalid_argument("action space and algebra dimensions differ");
  Report rep("action of " + A.name() + " on " + B.name());
  rep.merge(check_representation(d.rep));
  auto clause = [&](std::string name, auto&& sides) {
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < B.dim(); ++j)
        for (int k = 0; k < B.dim(); ++k) {
          auto [lhs, rhs] = sides(A.basis(i), B.basis(j), B.basis(k));
          if (lhs != rhs) {
            rep.fail(std::move(name), {i, j, k}, detail::sides(lhs, rhs));
            return;
          }
        }
    rep.pass(std::move(name));
  };
  auto rho = [&](const Vector& x) { return d.rep.rho(x); };
  auto mu = [&](const Vector& x) { return d.rep.mu(x); };
  clause("u∘(μ(x)v) = μ(x)(u∘v + v∘u)", [&](const Vector& x, const Vector& u, const Vector& v) {
    return std::pair{B.product(u, mu(x).apply(v)), mu(x).apply(B.product(u, v) + B.product(v, u))};
  });
  clause("u∘(ρ(x)v) = (μ(x)u)∘v + (ρ(x)u)∘v", [&](const Vector& x, const Vector& u, const Vector& v) {
    return std::pair{B.product(u, rho(x).apply(v)), B.product(mu(x).apply(u), v) + B.product(rho(x).apply(u), v)};
  });
  clause("ρ(x)(u∘v) = (μ(x)u)∘v + (ρ(x)u)∘v", [&](const Vector& x, const Vector& u, const Vector& v) {
    return std::pair{rho(x).apply(B.product(u, v)), B.product(mu(x).apply(u), v) + B.product(rho(x).apply(u), v)};
  });
  return rep;
}

/// (Tu)∘(Tv) = T(ρ(Tu)v + μ(Tv)u + λ u∘v) on basis pairs of the acted algebra.
inline Report check_relative_rb(const Matrix& T, const ActionData& d, const Scalar& lambda) {
  const auto& A = d.rep.base();
  const auto& B = d.acted;
  if (T.rows() != A.dim() || T.cols() != B.dim()) throw std::invalid_argument("relative Rota-Baxter operator has wrong shape");
  Report rep("relative Rota-Baxter operator of weight " + lambda.to_string());
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) {
      auto u = B.basis(i), v = B.basis(j);
      auto tu = T.apply(u), tv = T.apply(v);
      auto lhs = A.product(tu, tv);
      auto rhs = T.apply(d.rep.rho(tu).apply(v) + d.rep.mu(tv).apply(u) + lambda * B.product(u, v));
      if (lhs != rhs) {
        rep.fail("(Tu)∘(Tv) = T(ρ(Tu)v + μ(Tv)u + λu∘v)", {i, j}, detail::sides(lhs, rhs));
        return rep;
      }
    }
  rep.pass("(Tu)∘(Tv) = T(ρ(Tu)v + μ(Tv)u + λu∘v)");
  return rep;
}

/// The coregular action of A on an algebra structure on A*.
inline ActionData coregular_action(const Algebra& A, const Algebra& on_dual) {
  return ActionData{coregular_representation(A), on_dual};
}

// --- factorization ----------------------------------------------------------------------

/// x = x₊ − x₋ with x₊ = r₊I⁻¹x and x₋ = r₋I⁻¹x.
inline std::pair<Vector, Vector> factorize(const RMatrix& R, const Vector& x) {
  if (!R.I_invertible()) throw std::invalid_argument("factorize requires invertible I");
  auto xi = inverse(R.I()).apply(x);
  return {R.r_plus().apply(xi), R.r_minus().apply(xi)};
}

/// (x₊, x₋) lies in the image of r₊ ⊕ r₋ : A* → A ⊕ A.
inline bool in_factorization_image(const RMatrix& R, const Vector& xp, const Vector& xm) {
  Vector stacked = xp;
  stacked.insert(stacked.end(), xm.begin(), xm.end());
  return in_column_span(vstack(R.r_plus(), R.r_minus()), stacked);
}

}  // namespace zinbiel
