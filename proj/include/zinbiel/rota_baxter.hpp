#pragma once

/**
 * @file rota_baxter.hpp
 * @brief Rota-Baxter operators, descendent algebras, Connes cocycles,
 * quadratic Rota-Baxter Zinbiel algebras and their correspondence with
 * factorizable bialgebras.
 *
 * A form ω is stored as its Gram matrix W, ω(x,y) = x^T W y. The operator
 * ℐ_ω : A* → A is defined by ⟨ℐ_ω⁻¹x, y⟩ = ω(x,y), i.e. ℐ_ω = (W^T)⁻¹.
 */

#include "double.hpp"

#include <optional>
#include <string>

namespace zinbiel {

struct RBOperator {
  Algebra base;
  Matrix P;
  Scalar weight;
};

/// P(x)∘P(y) = P(P(x)∘y + x∘P(y) + λ x∘y) on basis pairs (∘ is the base product,
/// so the same check serves commutative bases).
inline Report check_rb(const RBOperator& op) {
  const auto& A = op.base;
  if (op.P.rows() != A.dim() || op.P.cols() != A.dim()) throw std::invalid_argument("Rota-Baxter operator has wrong shape");
  Report rep("Rota-Baxter operator of weight " + op.weight.to_string() + " on " + A.name());
  rep.add(detail::pair_clause("P(x)P(y) = P(P(x)y + xP(y) + λxy)", A.dim(), [&](int i, int j) {
    auto x = A.basis(i), y = A.basis(j);
    auto px = op.P.apply(x), py = op.P.apply(y);
    return std::pair{A.product(px, py), op.P.apply(A.product(px, y) + A.product(x, py) + op.weight * A.product(x, y))};
  }));
  return rep;
}

/// x·_P y = P(x)∘y + x∘P(y) + λ x∘y.
inline Algebra descendent(const RBOperator& op) {
  const auto& A = op.base;
  return Algebra::from_products(A.name() + "_P", A.dim(), A.field(), [&](int i, int j) {
    auto x = A.basis(i), y = A.basis(j);
    return A.product(op.P.apply(x), y) + A.product(x, op.P.apply(y)) + op.weight * A.product(x, y);
  });
}

/// P̃ = −λId − P.
inline RBOperator companion(const RBOperator& op) {
  return RBOperator{op.base, -(op.weight * Matrix::identity(op.base.dim())) - op.P, op.weight};
}

// --- Connes cocycles ----------------------------------------------------------------

struct ConnesCommutative {
  Algebra algebra;  ///< commutative associative
  BilinearForm omega;
  std::optional<RBOperator> P;
};

/// ω(Px,y) + ω(x,Py) + λω(x,y) = 0.
inline Clause rb_form_compatibility(const Matrix& W, const RBOperator& op) {
  Matrix m = op.P.transpose() * W + W * op.P + op.weight * W;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero())
        return {"compatibility ω(Px,y) + ω(x,Py) + λω(x,y) = 0", false, {i, j}, "value " + m(i, j).to_string()};
  return {"compatibility ω(Px,y) + ω(x,Py) + λω(x,y) = 0", true, {}, {}};
}

inline Report check_connes(const ConnesCommutative& c) {
  const auto& B = c.algebra;
  const auto& w = c.omega;
  if (w.dim() != B.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  Report rep("Connes cocycle on " + B.name());
  rep.merge(check_commutative_associative(B));
  rep.check("form is skew-symmetric", w.is_skew(), "matrix " + w.matrix().to_string());
  rep.check("form is nondegenerate", w.is_nondegenerate(), "matrix " + w.matrix().to_string());
  Clause cyc{"cyclic identity ω(x∗y,z) + ω(y∗z,x) + ω(z∗x,y) = 0", true, {}, {}};
  for (int i = 0; i < B.dim() && cyc.passed; ++i)
    for (int j = 0; j < B.dim() && cyc.passed; ++j)
      for (int k = 0; k < B.dim() && cyc.passed; ++k) {
        auto x = B.basis(i), y = B.basis(j), z = B.basis(k);
        auto s = w(B.product(x, y), z) + w(B.product(y, z), x) + w(B.product(z, x), y);
        if (!s.is_zero()) cyc = {cyc.name, false, {i, j, k}, "sum " + s.to_string()};
      }
  rep.add(std::move(cyc));
  if (c.P) {
    rep.merge(check_rb(*c.P), "P");
    rep.add(rb_form_compatibility(w.matrix(), *c.P));
  }
  return rep;
}

/// Recovers ∘ from ω(x∘y, z) = ω(y, x∗z).
inline QuadraticAlgebra zinbiel_from_connes(const ConnesCommutative& c) {
  auto rep = check_connes(ConnesCommutative{c.algebra, c.omega, std::nullopt});
  if (!rep.passed()) throw std::invalid_argument("zinbiel_from_connes requires a nondegenerate Connes cocycle:\n" + rep.to_text());
  const auto& B = c.algebra;
  const auto& W = c.omega.matrix();
  Matrix wt_inv = inverse(W.transpose());
  auto A = Algebra::from_products("Z(" + B.name() + ")", B.dim(), B.field(), [&](int i, int j) {
    // b_z = ω(e_j, e_i∗e_z) and W^T v = b.
    Vector b(static_cast<std::size_t>(B.dim()));
    for (int z = 0; z < B.dim(); ++z) b[static_cast<std::size_t>(z)] = c.omega(B.basis(j), B.product(B.basis(i), B.basis(z)));
    return wt_inv.apply(b);
  });
  return QuadraticAlgebra{A, c.omega};
}

inline ConnesCommutative connes_from_zinbiel(const QuadraticAlgebra& q, std::optional<RBOperator> P = std::nullopt) {
  auto rep = check_quadratic(q);
  if (!rep.passed()) throw std::invalid_argument("connes_from_zinbiel requires a quadratic Zinbiel algebra:\n" + rep.to_text());
  auto c = sub_adjacent(q.algebra);
  if (P) P = RBOperator{c, P->P, P->weight};
  return ConnesCommutative{c, q.omega, P};
}

// --- quadratic Rota-Baxter Zinbiel algebras ------------------------------------------------

struct QuadraticRB {
  QuadraticAlgebra quadratic;
  RBOperator P;
};

inline Report check_quadratic_rb(const QuadraticRB& q) {
  Report rep("quadratic Rota-Baxter structure on " + q.quadratic.algebra.name());
  rep.merge(check_quadratic(q.quadratic));
  rep.merge(check_rb(q.P), "P");
  rep.add(rb_form_compatibility(q.quadratic.omega.matrix(), q.P));
  return rep;
}

namespace detail {

inline RClass require_factorizable(const RMatrix& R, const Scalar& lambda, const char* who) {
  if (lambda.is_zero()) throw std::invalid_argument(std::string(who) + " requires a nonzero weight");
  auto cls = classify(R);
  if (cls != RClass::factorizable) throw std::invalid_argument(std::string(who) + " requires a factorizable r (got " + to_string(cls) + ")");
  return cls;
}

}  // namespace detail

/// P = λ r₋ I⁻¹ and ω_I(x,y) = ⟨I⁻¹x, y⟩.
inline QuadraticRB rb_from_factorizable(const RMatrix& R, const Scalar& lambda) {
  detail::require_factorizable(R, lambda, "rb_from_factorizable");
  Matrix inv = inverse(R.I());
  RBOperator P{R.base(), lambda * (R.r_minus() * inv), lambda};
  return QuadraticRB{QuadraticAlgebra{R.base(), BilinearForm(inv.transpose())}, P};
}

/// ℐ_ω = (W^T)⁻¹.
inline Matrix form_operator(const BilinearForm& w) { return inverse(w.matrix().transpose()); }

/// r₊ = (1/λ)(P + λId)ℐ_ω.
inline RMatrix factorizable_from_rb(const QuadraticRB& q, const Scalar& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("factorizable_from_rb requires a nonzero weight");
  if (q.P.weight != lambda) throw std::invalid_argument("factorizable_from_rb: weight differs from the operator's weight");
  auto rep = check_quadratic_rb(q);
  if (!rep.passed()) throw std::invalid_argument("factorizable_from_rb requires a quadratic Rota-Baxter algebra:\n" + rep.to_text());
  const auto& A = q.quadratic.algebra;
  Matrix rp = lambda.inverse() * ((q.P.P + lambda * Matrix::identity(A.dim())) * form_operator(q.quadratic.omega));
  return RMatrix(A, Tensor2(rp.transpose()));
}

/// ξ·_I η = −λ I⁻¹((1/λ Iξ)∘(1/λ Iη)).
inline Algebra product_I(const RMatrix& R, const Scalar& lambda) {
  detail::require_factorizable(R, lambda, "product_I");
  const auto& A = R.base();
  Matrix inv = inverse(R.I());
  Scalar s = lambda.inverse();
  return Algebra::from_products(A.name() + "*_I", A.dim(), A.field(), [&](int a, int b) {
    return -lambda * inv.apply(A.product(s * R.I().apply(A.basis(a)), s * R.I().apply(A.basis(b))));
  });
}

/// (1/λ)I : (A*,·_r) → A_P and −(1/λ)I : (A*,·_I) → (A,∘) are isomorphisms.
inline Report check_I_isomorphism(const RMatrix& R, const Scalar& lambda) {
  detail::require_factorizable(R, lambda, "check_I_isomorphism");
  const auto& A = R.base();
  Report rep("isomorphisms induced by I on " + A.name());
  auto q = rb_from_factorizable(R, lambda);
  Matrix f = lambda.inverse() * R.I();
  rep.check("(1/λ)I is invertible", is_invertible(f));
  rep.add(homomorphism_clause("(1/λ)I(ξ·_r η) = (1/λ)Iξ ·_P (1/λ)Iη", f, product_r(A, R.r()), descendent(q.P)));
  rep.add(homomorphism_clause("−(1/λ)I(ξ·_I η) = (−(1/λ)Iξ)∘(−(1/λ)Iη)", -f, product_I(R, lambda), A));
  return rep;
}

}  // namespace zinbiel
