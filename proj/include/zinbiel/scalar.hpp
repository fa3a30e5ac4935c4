#pragma once

/**
 * @file scalar.hpp
 * @brief Exact field elements: arbitrary-precision rationals or residues mod p.
 *
 * A Scalar is either a rational number (GMP mpq) or an element of F_p for a
 * runtime prime p. Integer and rational literals act as constants of every
 * field: mixing a rational with a residue maps the rational into F_p through
 * the canonical ring homomorphism, which fails only when p divides the
 * denominator. Mixing residues of different characteristic is an error.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace zinbiel {

class Scalar;

/// Ground field tag: the rationals (characteristic 0) or F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  Scalar make(long num, long den = 1) const;
  /// Map an element of the rationals (or of this field) into this field.
  Scalar coerce(const Scalar& s) const;
  /// Parse "a", "-a", "a/b" and coerce into this field.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(int n) : v_(mpq_class(n)) {}
  Scalar(long n) : v_(mpq_class(n)) {}
  Scalar(long long n) : v_(mpq_class(mpz_class(std::to_string(n)))) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar residue(std::int64_t value, std::uint64_t p);

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  /// 0 for rationals.
  std::uint64_t modulus() const { return is_rational() ? 0 : std::get<Residue>(v_).p; }
  FieldSpec field() const { return is_rational() ? FieldSpec{} : FieldSpec::prime(modulus()); }

  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t as_residue() const { return std::get<Residue>(v_).value; }

  bool is_zero() const;
  bool is_one() const { return *this == Scalar(1); }
  Scalar inverse() const;

  /// Canonical text: "n" or "n/d" for rationals, the residue in [0,p) for F_p.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };

  static std::uint64_t reduce(const mpq_class& q, std::uint64_t p);
  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
  /// Common characteristic of a binary operation (0 when both are rational).
  static std::uint64_t common_modulus(const Scalar& a, const Scalar& b);
  std::uint64_t residue_in(std::uint64_t p) const;

  std::variant<mpq_class, Residue> v_;
};

// ---------------------------------------------------------------------------

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p <= 3) throw std::invalid_argument("prime field requires p > 3");
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("prime field requires p < 2^31");
  return FieldSpec(p);
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    return prime(std::stoull(std::string(digits)));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or Fp:p)");
}

inline std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

inline Scalar FieldSpec::make(long num, long den) const {
  return coerce(Scalar::rational(mpz_class(num), mpz_class(den)));
}

inline Scalar FieldSpec::coerce(const Scalar& s) const {
  if (is_rational()) {
    if (!s.is_rational()) throw std::domain_error("cannot lift an F_p element to the rationals");
    return s;
  }
  if (!s.is_rational()) {
    if (s.modulus() != p_) throw std::domain_error("field characteristic mismatch");
    return s;
  }
  return s + Scalar::residue(0, p_);
}

inline Scalar FieldSpec::parse_scalar(std::string_view text) const {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && t.find_first_not_of("0123456789") == std::string_view::npos;
  };
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num_text) || !is_int(den_text) || den_text.front() == '-' || den_text.front() == '+')
    throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  std::string num(num_text);
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num), d{std::string(den_text)};
  if (d == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
  return coerce(Scalar::rational(n, d));
}

inline Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("division by zero");
  return Scalar(mpq_class(num, den));
}

inline Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  Scalar s;
  auto m = static_cast<std::int64_t>(p);
  s.v_ = Residue{static_cast<std::uint64_t>(((value % m) + m) % m), p};
  return s;
}

inline std::uint64_t Scalar::inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

inline std::uint64_t Scalar::reduce(const mpq_class& q, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.get_num() % pz, d = q.get_den() % pz;
  if (n < 0) n += pz;
  if (d == 0) throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in F_" + std::to_string(p));
  return n.get_ui() * inverse_mod(d.get_ui(), p) % p;
}

inline std::uint64_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  auto pa = a.modulus(), pb = b.modulus();
  if (pa && pb && pa != pb) throw std::domain_error("field characteristic mismatch");
  return pa ? pa : pb;
}

inline std::uint64_t Scalar::residue_in(std::uint64_t p) const {
  return is_rational() ? reduce(as_rational(), p) : as_residue();
}

inline bool Scalar::is_zero() const {
  return is_rational() ? sgn(as_rational()) == 0 : as_residue() == 0;
}

inline Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / as_rational());
  return residue(static_cast<std::int64_t>(inverse_mod(as_residue(), modulus())), modulus());
}

inline std::string Scalar::to_string() const {
  if (is_rational()) return as_rational().get_str();
  return std::to_string(as_residue());
}

inline Scalar operator+(const Scalar& a, const Scalar& b) {
  auto p = Scalar::common_modulus(a, b);
  if (!p) return Scalar(a.as_rational() + b.as_rational());
  return Scalar::residue(static_cast<std::int64_t>((a.residue_in(p) + b.residue_in(p)) % p), p);
}

inline Scalar operator-(const Scalar& a, const Scalar& b) {
  auto p = Scalar::common_modulus(a, b);
  if (!p) return Scalar(a.as_rational() - b.as_rational());
  return Scalar::residue(static_cast<std::int64_t>((a.residue_in(p) + p - b.residue_in(p)) % p), p);
}

inline Scalar operator*(const Scalar& a, const Scalar& b) {
  auto p = Scalar::common_modulus(a, b);
  if (!p) return Scalar(a.as_rational() * b.as_rational());
  return Scalar::residue(static_cast<std::int64_t>(a.residue_in(p) * b.residue_in(p) % p), p);
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
  return a * b.inverse();
}

inline Scalar operator-(const Scalar& a) {
  if (a.is_rational()) return Scalar(mpq_class(-a.as_rational()));
  auto p = a.modulus();
  return Scalar::residue(static_cast<std::int64_t>((p - a.as_residue()) % p), p);
}

inline bool operator==(const Scalar& a, const Scalar& b) {
  auto pa = a.modulus(), pb = b.modulus();
  if (!pa && !pb) return a.as_rational() == b.as_rational();
  if (pa && pb) return pa == pb && a.as_residue() == b.as_residue();
  auto p = pa ? pa : pb;
  try {
    return a.residue_in(p) == b.residue_in(p);
  } catch (const std::domain_error&) {
    return false;
  }
}

}  // namespace zinbiel
