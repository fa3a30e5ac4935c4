#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional algebras given by structure constants.
 *
 * Index convention (0-based internally, 1-based in files and reports):
 *   e_i ∘ e_j = Σ_k c_{ij}^k e_k.
 * Constants are stored sparsely, one term list per basis pair.
 */

#include "matrix.hpp"
#include "report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

enum class Flavor { zinbiel, commutative_associative, unchecked };

inline std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::zinbiel: return "zinbiel";
    case Flavor::commutative_associative: return "comm";
    case Flavor::unchecked: return "unchecked";
  }
  return "unchecked";
}

inline Flavor parse_flavor(std::string_view text) {
  if (text == "zinbiel") return Flavor::zinbiel;
  if (text == "comm") return Flavor::commutative_associative;
  if (text == "unchecked") return Flavor::unchecked;
  throw std::invalid_argument("unknown flavor '" + std::string(text) + "'");
}

struct Term {
  int index;
  Scalar coeff;
};

/// (i, j) -> coordinates of e_i ∘ e_j; absent pairs multiply to zero.
using ProductTable = std::map<std::pair<int, int>, Vector>;

class Algebra;
Report check_zinbiel(const Algebra& a);
Report check_commutative_associative(const Algebra& a);

class Algebra {
 public:
  Algebra() = default;

  /// Validates indices and coerces every constant into `field`. A flavor other
  /// than `unchecked` is verified and a violation throws std::invalid_argument.
  Algebra(std::string name, int dim, FieldSpec field, const ProductTable& table, Flavor flavor = Flavor::unchecked)
      : name_(std::move(name)), dim_(dim), field_(field), terms_(static_cast<std::size_t>(dim * dim)) {
    if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    for (const auto& [ij, v] : table) {
      auto [i, j] = ij;
      if (i < 0 || i >= dim || j < 0 || j >= dim) throw std::out_of_range("product index out of range");
      if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("product vector has wrong length");
      auto& slot = terms_[slot_index(i, j)];
      slot.clear();
      for (int k = 0; k < dim; ++k) {
        Scalar c = field.coerce(v[static_cast<std::size_t>(k)]);
        if (!c.is_zero()) slot.push_back({k, c});
      }
    }
    set_flavor(flavor);
  }

  static Algebra zero(int dim, FieldSpec field = {}, Flavor flavor = Flavor::zinbiel) {
    return Algebra("Z0(" + std::to_string(dim) + ")", dim, field, {}, flavor);
  }

  /// Builds the algebra from a callback giving e_i ∘ e_j.
  template <typename F>
  static Algebra from_products(std::string name, int dim, FieldSpec field, F&& product_of_basis,
                               Flavor flavor = Flavor::unchecked) {
    ProductTable t;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        Vector v = product_of_basis(i, j);
        if (!is_zero(v)) t[{i, j}] = std::move(v);
      }
    return Algebra(std::move(name), dim, field, t, flavor);
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  Flavor flavor() const { return flavor_; }

  Algebra with_flavor(Flavor f) const {
    Algebra copy = *this;
    copy.set_flavor(f);
    return copy;
  }
  Algebra with_name(std::string name) const {
    Algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  const std::vector<Term>& terms(int i, int j) const { return terms_.at(slot_index(i, j)); }

  Scalar constant(int i, int j, int k) const {
    for (const auto& t : terms(i, j))
      if (t.index == k) return t.coeff;
    return field_.make(0);
  }

  Vector basis_product(int i, int j) const {
    Vector v = zeros();
    for (const auto& t : terms(i, j)) v[static_cast<std::size_t>(t.index)] = t.coeff;
    return v;
  }

  Vector zeros() const { return Vector(static_cast<std::size_t>(dim_), field_.make(0)); }
  Vector basis(int i) const {
    Vector v = zeros();
    v.at(static_cast<std::size_t>(i)) = field_.make(1);
    return v;
  }

  /// Σ x_i y_j c_{ij}^k e_k.
  Vector product(const Vector& x, const Vector& y) const {
    require_dim(x);
    require_dim(y);
    Vector out = zeros();
    for (int i = 0; i < dim_; ++i) {
      const auto& xi = x[static_cast<std::size_t>(i)];
      if (xi.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const auto& yj = y[static_cast<std::size_t>(j)];
        if (yj.is_zero()) continue;
        Scalar s = xi * yj;
        for (const auto& t : terms(i, j)) out[static_cast<std::size_t>(t.index)] += s * t.coeff;
      }
    }
    return out;
  }

  /// L_x : y ↦ x ∘ y.
  Matrix left(const Vector& x) const {
    require_dim(x);
    Matrix m = zero_matrix();
    for (int i = 0; i < dim_; ++i) {
      const auto& xi = x[static_cast<std::size_t>(i)];
      if (xi.is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        for (const auto& t : terms(i, j)) m(t.index, j) += xi * t.coeff;
    }
    return m;
  }

  /// R_x : y ↦ y ∘ x.
  Matrix right(const Vector& x) const {
    require_dim(x);
    Matrix m = zero_matrix();
    for (int i = 0; i < dim_; ++i) {
      const auto& xi = x[static_cast<std::size_t>(i)];
      if (xi.is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        for (const auto& t : terms(j, i)) m(t.index, j) += xi * t.coeff;
    }
    return m;
  }

  Matrix left_basis(int i) const { return left(basis(i)); }
  Matrix right_basis(int i) const { return right(basis(i)); }

  Matrix zero_matrix() const {
    Matrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = field_.make(0);
    return m;
  }
  Matrix identity() const { return zero_matrix() + Matrix::identity(dim_); }

  bool is_trivial() const {
    for (const auto& s : terms_)
      if (!s.empty()) return false;
    return true;
  }

  /// Equality of dimension, field and every structure constant.
  friend bool same_structure(const Algebra& a, const Algebra& b) {
    if (a.dim_ != b.dim_ || !(a.field_ == b.field_)) return false;
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j)
        if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
    return true;
  }

  void require_dim(const Vector& v) const {
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("dimension mismatch: vector of length " + std::to_string(v.size()) + " in algebra of dimension " +
                                  std::to_string(dim_));
  }

 private:
  std::size_t slot_index(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::out_of_range("basis index out of range");
    return static_cast<std::size_t>(i * dim_ + j);
  }

  void set_flavor(Flavor f) {
    flavor_ = Flavor::unchecked;
    if (f == Flavor::zinbiel) {
      auto rep = check_zinbiel(*this);
      if (!rep.passed()) throw std::invalid_argument("algebra '" + name_ + "' is not Zinbiel:\n" + rep.to_text());
    } else if (f == Flavor::commutative_associative) {
      auto rep = check_commutative_associative(*this);
      if (!rep.passed()) throw std::invalid_argument("algebra '" + name_ + "' is not commutative associative:\n" + rep.to_text());
    }
    flavor_ = f;
  }

  std::string name_;
  int dim_ = 0;
  FieldSpec field_;
  Flavor flavor_ = Flavor::unchecked;
  std::vector<std::vector<Term>> terms_;
};

// --- elementary predicates --------------------------------------------------

/// x∘(y∘z) − (x∘y + y∘x)∘z.
inline Vector zinbiel_defect(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.product(x, a.product(y, z)) - a.product(a.product(x, y) + a.product(y, x), z);
}

namespace detail {

inline std::string sides(const Vector& lhs, const Vector& rhs) { return "lhs " + to_string(lhs) + ", rhs " + to_string(rhs); }

/// Runs `identity(i, j, k)` returning (lhs, rhs) over every basis triple.
template <typename F>
Clause triple_clause(std::string name, int n, F&& identity) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto [lhs, rhs] = identity(i, j, k);
        if (lhs != rhs) return {std::move(name), false, {i, j, k}, sides(lhs, rhs)};
      }
  return {std::move(name), true, {}, {}};
}

template <typename F>
Clause pair_clause(std::string name, int n, F&& identity) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [lhs, rhs] = identity(i, j);
      if (lhs != rhs) return {std::move(name), false, {i, j}, sides(lhs, rhs)};
    }
  return {std::move(name), true, {}, {}};
}

}  // namespace detail

inline Report check_zinbiel(const Algebra& a) {
  Report rep("Zinbiel identity on " + a.name());
  rep.add(detail::triple_clause("zinbiel identity x∘(y∘z) = (x∘y + y∘x)∘z", a.dim(), [&](int i, int j, int k) {
    auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
    return std::pair{a.product(x, a.product(y, z)), a.product(a.product(x, y) + a.product(y, x), z)};
  }));
  return rep;
}

inline Report check_left_commutativity(const Algebra& a) {
  Report rep("left commutativity on " + a.name());
  rep.add(detail::triple_clause("left commutativity x∘(y∘z) = y∘(x∘z)", a.dim(), [&](int i, int j, int k) {
    auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
    return std::pair{a.product(x, a.product(y, z)), a.product(y, a.product(x, z))};
  }));
  return rep;
}

inline Report check_commutative_associative(const Algebra& a) {
  Report rep("commutative associative axioms on " + a.name());
  rep.add(detail::pair_clause("commutativity x*y = y*x", a.dim(), [&](int i, int j) {
    return std::pair{a.basis_product(i, j), a.basis_product(j, i)};
  }));
  rep.add(detail::triple_clause("associativity (x*y)*z = x*(y*z)", a.dim(), [&](int i, int j, int k) {
    auto x = a.basis(i), y = a.basis(j), z = a.basis(k);
    return std::pair{a.product(a.product(x, y), z), a.product(x, a.product(y, z))};
  }));
  return rep;
}

/// The sub-adjacent commutative associative algebra x*y = x∘y + y∘x.
inline Algebra sub_adjacent(const Algebra& a) {
  if (a.flavor() != Flavor::zinbiel) {
    auto rep = check_zinbiel(a);
    if (!rep.passed()) throw std::invalid_argument("sub_adjacent requires a Zinbiel algebra:\n" + rep.to_text());
  }
  return Algebra::from_products(a.name() + "^c", a.dim(), a.field(),
                                [&](int i, int j) { return a.basis_product(i, j) + a.basis_product(j, i); },
                                Flavor::commutative_associative);
}

/// (L_x, R_x).
inline std::pair<Matrix, Matrix> mult_operators(const Algebra& a, const Vector& x) { return {a.left(x), a.right(x)}; }

/// Linear map φ is an algebra homomorphism from `src` to `dst`: φ(x∘y) = φ(x)∘φ(y) on basis pairs.
inline Clause homomorphism_clause(std::string name, const Matrix& phi, const Algebra& src, const Algebra& dst) {
  if (phi.rows() != dst.dim() || phi.cols() != src.dim()) throw std::invalid_argument("homomorphism shape mismatch");
  return detail::pair_clause(std::move(name), src.dim(), [&](int i, int j) {
    return std::pair{phi.apply(src.basis_product(i, j)), dst.product(phi.column(i), phi.column(j))};
  });
}

/// The algebra on the target of an invertible φ making φ an isomorphism:
/// u ∘' v = φ(φ⁻¹u ∘ φ⁻¹v).
inline Algebra transport_algebra(const Algebra& a, const Matrix& phi, std::string name = {}) {
  Matrix inv = inverse(phi);
  if (name.empty()) name = a.name() + "^φ";
  return Algebra::from_products(std::move(name), a.dim(), a.field(),
                                [&](int i, int j) { return phi.apply(a.product(inv.column(i), inv.column(j))); })
      .with_flavor(a.flavor());
}

// --- bilinear forms -----------------------------------------------------------

/// ω(e_i, e_j) = matrix(i, j).
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw std::invalid_argument("bilinear form matrix must be square");
  }

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, m_.apply(y)); }
  bool is_skew() const { return m_.transpose() == -m_; }
  bool is_nondegenerate() const { return is_invertible(m_); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

}  // namespace zinbiel
