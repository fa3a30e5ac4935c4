#pragma once

/**
 * @file matched_pair.hpp
 * @brief Matched pairs of Zinbiel algebras (and of commutative associative
 * algebras), and the bowtie product on A ⊕ B.
 *
 * ρ, μ : A → End(B) and ρ', μ' : B → End(A). The bowtie product is
 *   (x+u)∘(y+v) = x∘y + ρ'(u)y + μ'(v)x + u∘v + ρ(x)v + μ(y)u.
 */

#include "representation.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

class MatchedPair {
 public:
  MatchedPair() = default;
  MatchedPair(Algebra a, Algebra b, std::vector<Matrix> rho, std::vector<Matrix> mu, std::vector<Matrix> rho_p,
              std::vector<Matrix> mu_p)
      : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_.field() == b_.field())) throw std::invalid_argument("matched pair over different fields");
    on_b_ = Representation(a_, b_.dim(), std::move(rho), std::move(mu));
    on_a_ = Representation(b_, a_.dim(), std::move(rho_p), std::move(mu_p));
  }

  const Algebra& A() const { return a_; }
  const Algebra& B() const { return b_; }
  /// (B; ρ, μ) as a representation of A.
  const Representation& action_on_B() const { return on_b_; }
  /// (A; ρ', μ') as a representation of B.
  const Representation& action_on_A() const { return on_a_; }

  Matrix rho(const Vector& x) const { return on_b_.rho(x); }
  Matrix mu(const Vector& x) const { return on_b_.mu(x); }
  Matrix rho_p(const Vector& u) const { return on_a_.rho(u); }
  Matrix mu_p(const Vector& u) const { return on_a_.mu(u); }

  MatchedPair with_action_on_B(Representation r) const {
    auto copy = *this;
    copy.on_b_ = std::move(r);
    return copy;
  }
  MatchedPair with_action_on_A(Representation r) const {
    auto copy = *this;
    copy.on_a_ = std::move(r);
    return copy;
  }

 private:
  Algebra a_, b_;
  Representation on_b_, on_a_;
};

/// Both sides of compatibility equation `eq` (1..6). Equations 1–3 take
/// (x ∈ A, u, v ∈ B) and 4–6 take (u ∈ B, x, y ∈ A), all as basis indices.
inline std::pair<Vector, Vector> matched_pair_sides(const MatchedPair& m, int eq, int i, int j, int k) {
  // Equations 4–6 are 1–3 with the roles of A and B exchanged.
  bool swapped = eq > 3;
  const Algebra& A = swapped ? m.B() : m.A();
  const Algebra& B = swapped ? m.A() : m.B();
  const Representation& act = swapped ? m.action_on_A() : m.action_on_B();
  const Representation& back = swapped ? m.action_on_B() : m.action_on_A();
  auto rho = [&](const Vector& x) { return act.rho(x); };
  auto mu = [&](const Vector& x) { return act.mu(x); };
  auto rho_p = [&](const Vector& u) { return back.rho(u); };
  auto mu_p = [&](const Vector& u) { return back.mu(u); };
  auto x = A.basis(i), u = B.basis(j), v = B.basis(k);
  auto pB = [&](const Vector& p, const Vector& q) { return B.product(p, q); };
  switch (swapped ? eq - 3 : eq) {
    case 1:
      return {pB(u, mu(x).apply(v)) + mu(rho_p(v).apply(x)).apply(u), mu(x).apply(pB(u, v) + pB(v, u))};
    case 2:
      return {rho(x).apply(pB(u, v)) - pB(rho(x).apply(u), v),
              rho(mu_p(u).apply(x)).apply(v) + pB(mu(x).apply(u), v) + rho(rho_p(u).apply(x)).apply(v)};
    case 3:
      return {pB(u, rho(x).apply(v)) + mu(mu_p(v).apply(x)).apply(u) - pB(mu(x).apply(u), v),
              pB(rho(x).apply(u), v) + rho(mu_p(u).apply(x)).apply(v) + rho(rho_p(u).apply(x)).apply(v)};
  }
  throw std::invalid_argument("matched-pair equation index must be 1..6");
}

inline Report check_matched_pair(const MatchedPair& m) {
  Report rep("matched pair " + m.A().name() + " ⋈ " + m.B().name());
  rep.merge(check_representation(m.action_on_B()), "B as A-module");
  rep.merge(check_representation(m.action_on_A()), "A as B-module");
  for (int eq = 1; eq <= 6; ++eq) {
    int na = eq <= 3 ? m.A().dim() : m.B().dim();
    int nb = eq <= 3 ? m.B().dim() : m.A().dim();
    std::string name = "matched-pair compatibility " + std::to_string(eq);
    Clause c{name, true, {}, {}};
    for (int i = 0; i < na && c.passed; ++i)
      for (int j = 0; j < nb && c.passed; ++j)
        for (int k = 0; k < nb && c.passed; ++k) {
          auto [lhs, rhs] = matched_pair_sides(m, eq, i, j, k);
          if (lhs != rhs) c = {name, false, {i, j, k}, detail::sides(lhs, rhs)};
        }
    rep.add(std::move(c));
  }
  return rep;
}

/// The algebra A ⋈ B with basis (A basis, B basis).
inline Algebra bowtie(const MatchedPair& m) {
  const auto& A = m.A();
  const auto& B = m.B();
  int n = A.dim(), k = B.dim();
  auto split = [&](const Vector& a, const Vector& b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  return Algebra::from_products(A.name() + "⋈" + B.name(), n + k, A.field(), [&](int i, int j) {
    if (i < n && j < n) return split(A.basis_product(i, j), B.zeros());
    if (i >= n && j >= n) return split(A.zeros(), B.basis_product(i - n, j - n));
    if (i < n) {  // x ∘ v = μ'(v)x + ρ(x)v
      auto x = A.basis(i), v = B.basis(j - n);
      return split(m.mu_p(v).apply(x), m.rho(x).apply(v));
    }
    auto u = B.basis(i - n), y = A.basis(j);  // u ∘ y = ρ'(u)y + μ(y)u
    return split(m.rho_p(u).apply(y), m.mu(y).apply(u));
  });
}

// --- commutative associative matched pairs -------------------------------------

class CommMatchedPair {
 public:
  CommMatchedPair() = default;
  CommMatchedPair(Algebra a, Algebra b, std::vector<Matrix> zeta, std::vector<Matrix> zeta_p)
      : a_(std::move(a)), b_(std::move(b)), on_b_(a_, b_.dim(), std::move(zeta)), on_a_(b_, a_.dim(), std::move(zeta_p)) {}

  const Algebra& A() const { return a_; }
  const Algebra& B() const { return b_; }
  const CommRepresentation& action_on_B() const { return on_b_; }
  const CommRepresentation& action_on_A() const { return on_a_; }

  CommMatchedPair with_action_on_A(CommRepresentation r) const {
    auto copy = *this;
    copy.on_a_ = std::move(r);
    return copy;
  }
  CommMatchedPair with_action_on_B(CommRepresentation r) const {
    auto copy = *this;
    copy.on_b_ = std::move(r);
    return copy;
  }

 private:
  Algebra a_, b_;
  CommRepresentation on_b_, on_a_;
};

inline Report check_comm_matched_pair(const CommMatchedPair& m) {
  Report rep("commutative matched pair " + m.A().name() + " ⋈ " + m.B().name());
  rep.merge(check_comm_representation(m.action_on_B()), "B as A-module");
  rep.merge(check_comm_representation(m.action_on_A()), "A as B-module");
  // ζ(x)(u∗v) = (ζ(x)u)∗v + ζ(ζ'(u)x)v, then the same with A and B exchanged.
  auto one_side = [&](std::string name, const Algebra& A, const Algebra& B, const CommRepresentation& z,
                      const CommRepresentation& zp) {
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < B.dim(); ++j)
        for (int k = 0; k < B.dim(); ++k) {
          auto x = A.basis(i), u = B.basis(j), v = B.basis(k);
          auto lhs = z.zeta(x).apply(B.product(u, v));
          auto rhs = B.product(z.zeta(x).apply(u), v) + z.zeta(zp.zeta(u).apply(x)).apply(v);
          if (lhs != rhs) {
            rep.fail(std::move(name), {i, j, k}, detail::sides(lhs, rhs));
            return;
          }
        }
    rep.pass(std::move(name));
  };
  one_side("commutative compatibility 1", m.A(), m.B(), m.action_on_B(), m.action_on_A());
  one_side("commutative compatibility 2", m.B(), m.A(), m.action_on_A(), m.action_on_B());
  return rep;
}

/// x∗y + ζ'(u)y + ζ'(v)x + u∗v + ζ(x)v + ζ(y)u.
inline Algebra comm_bowtie(const CommMatchedPair& m) {
  const auto& A = m.A();
  const auto& B = m.B();
  int n = A.dim(), k = B.dim();
  auto split = [&](const Vector& a, const Vector& b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  return Algebra::from_products(A.name() + "⋈" + B.name(), n + k, A.field(), [&](int i, int j) {
    if (i < n && j < n) return split(A.basis_product(i, j), B.zeros());
    if (i >= n && j >= n) return split(A.zeros(), B.basis_product(i - n, j - n));
    int ai = i < n ? i : j, bi = i < n ? j - n : i - n;
    auto x = A.basis(ai), u = B.basis(bi);
    return split(m.action_on_A().zeta(u).apply(x), m.action_on_B().zeta(x).apply(u));
  });
}

/// (A^c, B^c; ρ+μ, ρ'+μ').
inline CommMatchedPair sub_adjacent_matched_pair(const MatchedPair& m) {
  auto rep = check_matched_pair(m);
  if (!rep.passed()) throw std::invalid_argument("sub_adjacent_matched_pair requires a valid matched pair:\n" + rep.to_text());
  std::vector<Matrix> zeta, zeta_p;
  for (int i = 0; i < m.A().dim(); ++i) zeta.push_back(m.action_on_B().rho_basis(i) + m.action_on_B().mu_basis(i));
  for (int i = 0; i < m.B().dim(); ++i) zeta_p.push_back(m.action_on_A().rho_basis(i) + m.action_on_A().mu_basis(i));
  return CommMatchedPair(sub_adjacent(m.A()), sub_adjacent(m.B()), std::move(zeta), std::move(zeta_p));
}

}  // namespace zinbiel
