#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "wentw/errors.hpp"

namespace wentw {

/// The ground field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws DataError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  /// "Q" or "F_p".
  std::string name() const;
  /// Accepts "Q", "F_p", "Fp", "GF(p)".
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept normalized by GMP (den > 0,
/// gcd = 1); residues are kept in [0, p).
class Scalar {
 public:
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& q);
  static Scalar residue(Field f, std::uint32_t r);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Rationals as "a" or "a/b", residues as decimal.
  std::string to_string() const;
  /// Inverse of to_string; integers are reduced mod p in prime fields and a
  /// rational "a/b" is accepted there too when b is invertible.
  static Scalar parse(Field f, std::string_view text);

  std::uint32_t residue_value() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }

 private:
  Scalar(Field f, std::variant<std::uint32_t, mpq_class> v) : field_(f), value_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

namespace modp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return std::uint32_t(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
}  // namespace modp

}  // namespace wentw
