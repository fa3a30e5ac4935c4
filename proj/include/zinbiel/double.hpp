#pragma once

/**
 * @file double.hpp
 * @brief The double 𝔡 = A ⋈ A* of a Zinbiel bialgebra and its canonical
 * r = Σ e_i⊗e_i*.
 *
 * Basis of 𝔡 is (e_1..e_n, e_1*..e_n*); covectors on 𝔡 are written (ξ, x)
 * with ξ pairing the A block and x the A* block.
 */

#include "yang_baxter.hpp"

#include <string>

namespace zinbiel {

struct DoubleAlgebra {
  Bialgebra source;
  Algebra algebra;
  Tensor2 canonical_r;
  /// ·_r on 𝔡* computed from canonical_r.
  Algebra dual_product;
};

/// (ξ,x)·(η,y) = (ξ·_{A*}η, x∘y) on 𝔡* = A* ⊕ A.
inline Algebra expected_double_dual_product(const Bialgebra& b) {
  int n = b.dim();
  return Algebra::from_products("D(" + b.name() + ")*", 2 * n, b.primal().field(), [&](int i, int j) {
    Vector out(static_cast<std::size_t>(2 * n));
    if (i < n && j < n) {
      auto p = b.dual().basis_product(i, j);
      std::copy(p.begin(), p.end(), out.begin());
    } else if (i >= n && j >= n) {
      auto p = b.primal().basis_product(i - n, j - n);
      std::copy(p.begin(), p.end(), out.begin() + n);
    }
    return out;
  });
}

inline DoubleAlgebra zinbiel_double(const Bialgebra& b) {
  require_bialgebra(b, "zinbiel_double");
  int n = b.dim();
  auto d = bowtie(bialgebra_to_matched_pair(b)).with_name("D(" + b.name() + ")").with_flavor(Flavor::zinbiel);
  Tensor2 r(2 * n);
  for (int i = 0; i < n; ++i) r(i, n + i) = 1;
  auto dual = product_r(d, r, "D(" + b.name() + ")*_r");
  return DoubleAlgebra{b, d, r, dual};
}

inline Report verify_double_factorizable(const DoubleAlgebra& D) {
  int n = D.source.dim();
  Report rep("factorizable double of " + D.source.name());
  RMatrix R(D.algebra, D.canonical_r);
  rep.merge(check_zinbiel(D.algebra), "double");
  auto zero = R.bracket().first_nonzero();
  if (zero)
    rep.fail("⟦r,r⟧ = 0", {(*zero)[0], (*zero)[1], (*zero)[2]}, "⟦r,r⟧ = " + R.bracket().to_string());
  else
    rep.pass("⟦r,r⟧ = 0");
  rep.merge(check_LLR_invariance(D.algebra, R.skew()), "skew part");
  Matrix id = Matrix::identity(n), z(n, n);
  auto block = [&](const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) { return vstack(hstack(a, b), hstack(c, d)); };
  auto expect = [&](std::string name, const Matrix& got, const Matrix& want) {
    rep.check(std::move(name), got == want, "got " + got.to_string() + ", expected " + want.to_string());
  };
  expect("r₊(ξ,x) = (0,ξ)", R.r_plus(), block(z, z, id, z));
  expect("r₋(ξ,x) = (x,0)", R.r_minus(), block(z, id, z, z));
  expect("I(ξ,x) = (−x,ξ)", R.I(), block(z, -id, id, z));
  rep.check("I is invertible", R.I_invertible(), "rank " + std::to_string(rank(R.I())));
  auto cb = check_coboundary_bialgebra(D.algebra, D.canonical_r);
  rep.merge(cb.report, "coboundary");
  if (cb.report.passed()) {
    auto cls = classify(R);
    rep.check("classification is factorizable", cls == RClass::factorizable, "classified as " + to_string(cls));
  } else {
    rep.fail("classification is factorizable", {}, "not a coboundary bialgebra");
  }
  auto expected = expected_double_dual_product(D.source);
  rep.check("dual product (ξ,x)·(η,y) = (ξ·η, x∘y)", same_structure(product_r(D.algebra, D.canonical_r), expected) &&
                                                          same_structure(D.dual_product, expected),
            "product differs from (ξ·η, x∘y)");
  return rep;
}

}  // namespace zinbiel
