#pragma once

/**
 * @file bialgebra.hpp
 * @brief Zinbiel bialgebras, quadratic Zinbiel algebras and Manin triples.
 *
 * A Bialgebra is stored as two structure-constant tables: the product on A
 * and the product on A* in the dual basis. The cobrackets are derived views:
 *   α(e_k) = Σ d_{ab}^k e_a⊗e_b   (d = constants of A*),
 *   β(e_k*) = Σ c_{ab}^k e_a*⊗e_b* (c = constants of A).
 */

#include "matched_pair.hpp"
#include "tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

class Bialgebra {
 public:
  Bialgebra() = default;
  Bialgebra(Algebra primal, Algebra dual, std::string name = {}) : a_(std::move(primal)), d_(std::move(dual)), name_(std::move(name)) {
    if (a_.dim() != d_.dim()) throw std::invalid_argument("bialgebra: primal and dual dimensions differ");
    if (!(a_.field() == d_.field())) throw std::invalid_argument("bialgebra: primal and dual fields differ");
    if (name_.empty()) name_ = "(" + a_.name() + ", " + d_.name() + ")";
  }

  const Algebra& primal() const { return a_; }
  const Algebra& dual() const { return d_; }
  const std::string& name() const { return name_; }
  int dim() const { return a_.dim(); }

  Tensor2 alpha(int k) const { return cobracket_of(d_, k); }
  Tensor2 beta(int k) const { return cobracket_of(a_, k); }
  /// α extended linearly.
  Tensor2 alpha(const Vector& x) const { return combine(d_, x); }
  Tensor2 beta(const Vector& xi) const { return combine(a_, xi); }

 private:
  static Tensor2 cobracket_of(const Algebra& alg, int k) {
    Tensor2 t(alg.dim());
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = 0; b < alg.dim(); ++b) t(a, b) = alg.constant(a, b, k);
    return t;
  }
  static Tensor2 combine(const Algebra& alg, const Vector& x) {
    alg.require_dim(x);
    Tensor2 t(alg.dim());
    for (int k = 0; k < alg.dim(); ++k)
      if (!x[static_cast<std::size_t>(k)].is_zero()) t = t + x[static_cast<std::size_t>(k)] * cobracket_of(alg, k);
    return t;
  }

  Algebra a_, d_;
  std::string name_;
};

/// (A, A*) with the zero product on A*.
inline Bialgebra trivial_bialgebra(const Algebra& a) {
  return Bialgebra(a, Algebra::zero(a.dim(), a.field()).with_name(a.name() + "*"), a.name() + " trivial");
}

/// (A*, A, β, α).
inline Bialgebra dual_bialgebra(const Bialgebra& b) { return Bialgebra(b.dual(), b.primal(), b.name() + " dual"); }

namespace detail {

/// t(x∗y) = (L_x⊗Id)t(y) + (Id⊗(L_y+R_y))t(x) over basis pairs of `alg`,
/// with t(e_k) read from `co`.
inline Clause cocycle_clause(std::string name, const Algebra& alg, const Algebra& co) {
  auto t = [&](const Vector& x) {
    Tensor2 out(alg.dim());
    for (int k = 0; k < alg.dim(); ++k) {
      const auto& xk = x[static_cast<std::size_t>(k)];
      if (xk.is_zero()) continue;
      for (int a = 0; a < alg.dim(); ++a)
        for (int b = 0; b < alg.dim(); ++b) out(a, b) += xk * co.constant(a, b, k);
    }
    return out;
  };
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      auto x = alg.basis(i), y = alg.basis(j);
      auto lhs = t(alg.product(x, y) + alg.product(y, x));
      auto rhs = apply_slotwise(alg.left(x), alg.identity(), t(y)) + apply_slotwise(alg.identity(), alg.left(y) + alg.right(y), t(x));
      if (!(lhs == rhs)) return {std::move(name), false, {i, j}, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string()};
    }
  return {std::move(name), true, {}, {}};
}

}  // namespace detail

/// α is a 1-cocycle of A^c with values in A⊗A, and β likewise for A*.
inline Report check_alpha_cocycle(const Bialgebra& b) {
  Report rep("cocycle conditions of " + b.name());
  rep.add(detail::cocycle_clause("alpha cocycle α(x∗y) = (L_x⊗Id)α(y) + (Id⊗(L_y+R_y))α(x)", b.primal(), b.dual()));
  rep.add(detail::cocycle_clause("beta cocycle β(ξ∗η) = (L_ξ⊗Id)β(η) + (Id⊗(L_η+R_η))β(ξ)", b.dual(), b.primal()));
  return rep;
}

inline Report check_bialgebra(const Bialgebra& b) {
  Report rep("bialgebra " + b.name());
  rep.merge(check_zinbiel(b.primal()), "A");
  rep.merge(check_zinbiel(b.dual()), "A*");
  rep.merge(check_alpha_cocycle(b));
  return rep;
}

/// (A, A*; −L*−R*, R*, −𝓛*−𝓡*, 𝓡*), i.e. (L^T+R^T, −R^T, 𝓛^T+𝓡^T, −𝓡^T).
inline MatchedPair bialgebra_to_matched_pair(const Bialgebra& b) {
  auto on_dual = coregular_representation(b.primal());
  auto on_primal = coregular_representation(b.dual());
  return MatchedPair(b.primal(), b.dual(), on_dual.rho_family(), on_dual.mu_family(), on_primal.rho_family(),
                     on_primal.mu_family());
}

// --- quadratic algebras and Manin triples ----------------------------------------

struct QuadraticAlgebra {
  Algebra algebra;
  BilinearForm omega;
};

inline Report check_quadratic(const QuadraticAlgebra& q) {
  const auto& a = q.algebra;
  const auto& w = q.omega;
  Report rep("quadratic structure on " + a.name());
  if (w.dim() != a.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  rep.merge(check_zinbiel(a));
  rep.check("form is skew-symmetric", w.is_skew(), "matrix " + w.matrix().to_string());
  rep.check("form is nondegenerate", w.is_nondegenerate(), "matrix " + w.matrix().to_string());
  auto scalar_clause = [&](std::string name, auto&& sides) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) {
          auto [lhs, rhs] = sides(a.basis(i), a.basis(j), a.basis(k));
          if (lhs != rhs) {
            rep.fail(std::move(name), {i, j, k}, "lhs " + lhs.to_string() + ", rhs " + rhs.to_string());
            return;
          }
        }
    rep.pass(std::move(name));
  };
  scalar_clause("invariance ω(x∘y,z) = ω(y, x∘z + z∘x)", [&](const Vector& x, const Vector& y, const Vector& z) {
    return std::pair{w(a.product(x, y), z), w(y, a.product(x, z) + a.product(z, x))};
  });
  scalar_clause("symmetry ω(x∘y,z) = ω(z∘y,x)", [&](const Vector& x, const Vector& y, const Vector& z) {
    return std::pair{w(a.product(x, y), z), w(a.product(z, y), x)};
  });
  return rep;
}

/// Subspaces are given by the columns of coordinate matrices in the ambient basis.
struct ManinTriple {
  QuadraticAlgebra ambient;
  Matrix first;
  Matrix second;
};

inline Report check_manin_triple(const ManinTriple& m) {
  const auto& a = m.ambient.algebra;
  const auto& W = m.ambient.omega.matrix();
  Report rep("Manin triple in " + a.name());
  rep.merge(check_quadratic(m.ambient), "ambient");
  int n = a.dim();
  if (m.first.rows() != n || m.second.rows() != n) throw std::invalid_argument("subspace coordinates have wrong length");
  rep.check("direct sum decomposition A1 ⊕ A2", m.first.cols() + m.second.cols() == n && rank(hstack(m.first, m.second)) == n,
            "rank " + std::to_string(rank(hstack(m.first, m.second))) + " of " + std::to_string(n));
  auto closure = [&](std::string name, const Matrix& s) {
    for (int i = 0; i < s.cols(); ++i)
      for (int j = 0; j < s.cols(); ++j) {
        auto p = a.product(s.column(i), s.column(j));
        if (!in_column_span(s, p)) {
          rep.fail(std::move(name), {i, j}, "product " + to_string(p) + " leaves the subspace");
          return;
        }
      }
    rep.pass(std::move(name));
  };
  closure("A1 is a subalgebra", m.first);
  closure("A2 is a subalgebra", m.second);
  auto isotropy = [&](std::string name, const Matrix& s) {
    auto g = s.transpose() * W * s;
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j)
        if (!g(i, j).is_zero()) {
          rep.fail(std::move(name), {i, j}, "ω = " + g(i, j).to_string());
          return;
        }
    rep.pass(std::move(name));
  };
  isotropy("A1 is isotropic", m.first);
  isotropy("A2 is isotropic", m.second);
  return rep;
}

/// ω(x+ξ, y+η) = ⟨ξ,y⟩ − ⟨η,x⟩ on A ⊕ A*.
inline BilinearForm standard_form(int n) {
  Matrix w(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    w(i, n + i) = -1;
    w(n + i, i) = 1;
  }
  return BilinearForm(w);
}

inline Bialgebra require_bialgebra(const Bialgebra& b, const char* who) {
  auto rep = check_bialgebra(b);
  if (!rep.passed()) throw std::invalid_argument(std::string(who) + " requires a valid bialgebra:\n" + rep.to_text());
  return b;
}

/// (A ⋈ A*, A, A*) with the standard form.
inline ManinTriple bialgebra_to_manin(const Bialgebra& b) {
  require_bialgebra(b, "bialgebra_to_manin");
  int n = b.dim();
  auto ambient = bowtie(bialgebra_to_matched_pair(b)).with_name(b.primal().name() + "⋈" + b.dual().name());
  Matrix s1(2 * n, n), s2(2 * n, n);
  for (int i = 0; i < n; ++i) {
    s1(i, i) = 1;
    s2(n + i, i) = 1;
  }
  return ManinTriple{QuadraticAlgebra{ambient, standard_form(n)}, s1, s2};
}

/// Reads the products of A1 and of A2 ≅ A1* (identified through ω) in the
/// column bases, with A2 rebased to the basis dual to the columns of A1.
inline Bialgebra manin_to_bialgebra(const ManinTriple& m) {
  auto rep = check_manin_triple(m);
  if (!rep.passed()) throw std::invalid_argument("manin_to_bialgebra requires a valid Manin triple:\n" + rep.to_text());
  const auto& amb = m.ambient.algebra;
  const auto& W = m.ambient.omega.matrix();
  int n = m.first.cols();
  // G(a,i) = ω(f_a, e_i); the dual basis e_k* = Σ_a M(a,k) f_a has M = G^{-T}.
  Matrix g = m.second.transpose() * W * m.first;
  Matrix dual_cols = m.second * inverse(g).transpose();
  auto restrict = [&](const Matrix& s, std::string name) {
    return Algebra::from_products(std::move(name), n, amb.field(), [&](int i, int j) {
      auto coords = solve(s, amb.product(s.column(i), s.column(j)));
      return *coords;
    });
  };
  return Bialgebra(restrict(m.first, "A1").with_flavor(Flavor::zinbiel), restrict(dual_cols, "A2").with_flavor(Flavor::zinbiel));
}

// --- homomorphisms ---------------------------------------------------------------

/// φ : A1 → A2 is an algebra homomorphism and φ^T : A2* → A1* is one as well.
inline Report check_bialgebra_hom(const Bialgebra& b1, const Bialgebra& b2, const Matrix& phi) {
  Report rep("bialgebra homomorphism " + b1.name() + " → " + b2.name());
  rep.add(homomorphism_clause("φ(x∘y) = φ(x)∘φ(y)", phi, b1.primal(), b2.primal()));
  rep.add(homomorphism_clause("φ*(ξ·η) = φ*(ξ)·φ*(η)", phi.transpose(), b2.dual(), b1.dual()));
  return rep;
}

/// The bialgebra on the target making φ an isomorphism: the primal product is
/// transported by φ and the dual product by (φ^T)⁻¹.
inline Bialgebra transport_bialgebra(const Bialgebra& b, const Matrix& phi) {
  if (!is_invertible(phi)) throw std::domain_error("transport requires an invertible map");
  return Bialgebra(transport_algebra(b.primal(), phi), transport_algebra(b.dual(), inverse(phi.transpose())),
                   b.name() + " transported");
}

}  // namespace zinbiel
