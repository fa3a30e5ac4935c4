#pragma once

/**
 * @file corpus.hpp
 * @brief Bundled fixtures: small Zinbiel algebras, bialgebras, r-matrices and
 * quadratic structures, plus seeded random generators for property tests.
 *
 * The F_7 tensors below were found by search_zybe and are frozen so that
 * regressions in the bracket show up as fixture failures.
 */

#include "rota_baxter.hpp"
#include "search.hpp"

#include <random>
#include <string>
#include <vector>

namespace zinbiel::corpus {

inline FieldSpec f7() { return FieldSpec::prime(7); }

inline std::string suffix(const FieldSpec& f) { return f.is_rational() ? "" : "_F" + std::to_string(f.characteristic()); }

inline Algebra zero(int n, const FieldSpec& f = {}) { return Algebra::zero(n, f).with_name("Z0(" + std::to_string(n) + ")" + suffix(f)); }

/// e1∘e1 = e2.
inline Algebra n2(const FieldSpec& f = {}) {
  ProductTable t;
  t[{0, 0}] = {f.make(0), f.make(1)};
  return Algebra("N2" + suffix(f), 2, f, t);
}

/// e1∘e1 = e2, e1∘e2 = c e3, e2∘e1 = c' e3; Zinbiel exactly when c = 2c'.
inline Algebra n3(const Scalar& c, const Scalar& cp, const FieldSpec& f = {}, Flavor flavor = Flavor::zinbiel) {
  ProductTable t;
  auto z = f.make(0);
  t[{0, 0}] = {z, f.make(1), z};
  t[{0, 1}] = {z, z, f.coerce(c)};
  t[{1, 0}] = {z, z, f.coerce(cp)};
  for (auto it = t.begin(); it != t.end();) it = is_zero(it->second) ? t.erase(it) : std::next(it);
  return Algebra("N3(" + c.to_string() + "," + cp.to_string() + ")" + suffix(f), 3, f, t, flavor);
}

/// e∘e = e: commutative and associative but not Zinbiel.
inline Algebra idempotent() {
  ProductTable t;
  t[{0, 0}] = {Scalar(1)};
  return Algebra("E", 1, FieldSpec::rationals(), t, Flavor::unchecked);
}

/// Base algebras of dimension ≤ 3.
inline std::vector<Algebra> base_algebras() {
  std::vector<Algebra> out;
  for (int n = 1; n <= 4; ++n) out.push_back(zero(n));
  out.push_back(n2());
  out.push_back(n3(2, 1));
  out.push_back(n3(0, 0));
  out.push_back(n3(1, Scalar::rational(1, 2)));
  out.push_back(zero(2, f7()));
  out.push_back(n2(f7()));
  out.push_back(n3(2, 1, f7()));
  return out;
}

inline std::vector<DoubleAlgebra> doubles() {
  std::vector<DoubleAlgebra> out;
  for (const auto& a : base_algebras())
    if (a.dim() <= 3) out.push_back(zinbiel_double(trivial_bialgebra(a)));
  return out;
}

inline std::vector<Algebra> algebras() {
  auto out = base_algebras();
  for (const auto& d : doubles()) out.push_back(d.algebra);
  return out;
}

struct FrozenTensor {
  Algebra algebra;
  Tensor2 r;
};

inline Tensor2 tensor(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  int n = static_cast<int>(rows.size());
  Tensor2 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = f.make(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return t;
}

/// ZYBE solutions over F_7 passing both coboundary conditions.
inline std::vector<FrozenTensor> frozen_solutions() {
  auto f = f7();
  auto a = n2(f), b = n3(2, 1, f);
  return {
      {a, tensor(f, {{0, 1}, {1, 0}})},
      {a, tensor(f, {{0, 1}, {1, 3}})},
      {a, tensor(f, {{0, 0}, {0, 5}})},
      {b, tensor(f, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}})},
      {b, tensor(f, {{0, 0, 2}, {0, 1, 0}, {2, 0, 0}})},
      {b, tensor(f, {{0, 0, 5}, {0, 6, 0}, {5, 0, 0}})},
      {b, tensor(f, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}})},
      {b, tensor(f, {{0, 0, 0}, {0, 3, 1}, {0, 0, 0}})},
  };
}

/// Tensors over F_7 meeting the skew-part condition but not H(x)⟦r,r⟧ = 0.
inline std::vector<FrozenTensor> bracket_obstructed() {
  auto f = f7();
  auto a = n2(f);
  return {{a, tensor(f, {{1, 0}, {0, 0}})}, {a, tensor(f, {{2, 0}, {0, 1}})}, {a, tensor(f, {{3, 1}, {1, 0}})}};
}

// --- random generators ------------------------------------------------------------------

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& g, int lo = -3, int hi = 3) {
  return f.make(std::uniform_int_distribution<int>(lo, hi)(g));
}

inline Matrix random_matrix(int rows, int cols, const FieldSpec& f, std::mt19937_64& g) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_scalar(f, g);
  return m;
}

inline Matrix random_invertible(int n, const FieldSpec& f, std::mt19937_64& g) {
  for (;;) {
    auto m = random_matrix(n, n, f, g);
    if (is_invertible(m)) return m;
  }
}

inline Vector random_vector(int n, const FieldSpec& f, std::mt19937_64& g) {
  Vector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = random_scalar(f, g);
  return v;
}

inline Tensor2 random_tensor(int n, const FieldSpec& f, std::mt19937_64& g) { return Tensor2(random_matrix(n, n, f, g)); }

/// (φ⊗φ)r.
inline Tensor2 transport_tensor(const Tensor2& r, const Matrix& phi) { return Tensor2(phi * r.matrix() * phi.transpose()); }

/// Valid representation of `a` on a space of dimension ≤ max_dim: a direct sum
/// of regular, coregular and zero pieces, conjugated by a random invertible map.
inline Representation random_representation(const Algebra& a, int max_dim, std::mt19937_64& g) {
  int n = a.dim();
  std::vector<Matrix> rho(static_cast<std::size_t>(n)), mu(static_cast<std::size_t>(n));
  int m = 0;
  auto append = [&](const Representation& piece) {
    for (int i = 0; i < n; ++i) {
      rho[static_cast<std::size_t>(i)] = m ? direct_sum(rho[static_cast<std::size_t>(i)], piece.rho_basis(i)) : piece.rho_basis(i);
      mu[static_cast<std::size_t>(i)] = m ? direct_sum(mu[static_cast<std::size_t>(i)], piece.mu_basis(i)) : piece.mu_basis(i);
    }
    m += piece.space_dim();
  };
  auto pick = std::uniform_int_distribution<int>(0, 2);
  while (m == 0 || (m < max_dim && pick(g) != 0)) {
    int kind = pick(g);
    if (kind != 2 && n <= max_dim - m) {
      append(kind == 0 ? regular_representation(a) : coregular_representation(a));
    } else {
      int k = std::uniform_int_distribution<int>(1, max_dim - m)(g);
      append(Representation(a, k, std::vector<Matrix>(static_cast<std::size_t>(n), Matrix(k, k)),
                            std::vector<Matrix>(static_cast<std::size_t>(n), Matrix(k, k))));
    }
    if (m >= max_dim) break;
  }
  auto phi = random_invertible(m, a.field(), g);
  auto inv = inverse(phi);
  for (int i = 0; i < n; ++i) {
    rho[static_cast<std::size_t>(i)] = phi * rho[static_cast<std::size_t>(i)] * inv;
    mu[static_cast<std::size_t>(i)] = phi * mu[static_cast<std::size_t>(i)] * inv;
  }
  return Representation(a, m, std::move(rho), std::move(mu));
}

// --- bialgebras and r-matrices ------------------------------------------------------------

/// Doubles of the trivial bialgebras with their canonical r.
inline std::vector<RMatrix> double_r_matrices() {
  std::vector<RMatrix> out;
  for (const auto& d : doubles()) out.emplace_back(d.algebra, d.canonical_r);
  return out;
}

/// A factorizable F_7 fixture in a non-standard basis: the double of N2_F7
/// transported by a fixed invertible change of basis.
inline RMatrix transported_factorizable() {
  auto f = f7();
  auto D = zinbiel_double(trivial_bialgebra(n2(f)));
  Matrix phi = Matrix::from_rows({{f.make(1), f.make(2), f.make(0), f.make(3)},
                                  {f.make(0), f.make(1), f.make(4), f.make(0)},
                                  {f.make(5), f.make(0), f.make(1), f.make(1)},
                                  {f.make(0), f.make(6), f.make(0), f.make(1)}});
  auto A = transport_algebra(D.algebra, phi, "D(N2_F7)'");
  return RMatrix(A, transport_tensor(D.canonical_r, phi));
}

inline std::vector<RMatrix> factorizable() {
  auto out = double_r_matrices();
  out.push_back(transported_factorizable());
  return out;
}

inline std::vector<RMatrix> triangular() {
  std::vector<RMatrix> out;
  for (const auto& s : frozen_solutions())
    if (s.r.is_symmetric()) out.emplace_back(s.algebra, s.r);
  return out;
}

/// Factorizable and triangular fixtures together.
inline std::vector<RMatrix> quasi_triangular() {
  auto out = factorizable();
  auto t = triangular();
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

inline std::vector<Bialgebra> bialgebras() {
  std::vector<Bialgebra> out;
  for (const auto& a : base_algebras()) {
    auto t = trivial_bialgebra(a);
    out.push_back(t);
    out.push_back(dual_bialgebra(t));
  }
  for (const auto& R : double_r_matrices())
    if (R.base().dim() <= 4) out.push_back(*check_coboundary_bialgebra(R.base(), R.r()).bialgebra);
  for (const auto& s : frozen_solutions()) out.push_back(*check_coboundary_bialgebra(s.algebra, s.r).bialgebra);
  auto T = transported_factorizable();
  out.push_back(*check_coboundary_bialgebra(T.base(), T.r()).bialgebra);
  return out;
}

/// Manin-triple ambients of the bialgebras of dimension ≤ 3 and the
/// quadratic structures induced by the factorizable fixtures.
inline std::vector<QuadraticAlgebra> quadratic() {
  std::vector<QuadraticAlgebra> out;
  for (const auto& b : bialgebras())
    if (b.dim() <= 3)
      out.push_back(bialgebra_to_manin(b).ambient);
  for (const auto& R : factorizable()) out.push_back(rb_from_factorizable(R, Scalar(1)).quadratic);
  return out;
}

inline std::vector<QuadraticRB> quadratic_rb(const Scalar& lambda) {
  std::vector<QuadraticRB> out;
  for (const auto& R : factorizable()) out.push_back(rb_from_factorizable(R, lambda));
  return out;
}

}  // namespace zinbiel::corpus
