#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "starcheck/errors.hpp"

namespace starcheck {

/// Either the rationals or a prime field GF(p) with p odd.
///
/// Characteristic 2 is rejected here, at construction, so that every
/// downstream computation may divide by 2.
class Field {
 public:
  static Field rationals() noexcept { return Field{0}; }

  /// Throws InvalidField unless `p` is an odd prime below 2^31.
  static Field prime(std::int64_t p);

  /// "q" or "gf:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::int64_t characteristic() const noexcept { return p_; }

  /// "Q" or "GF(p)".
  std::string name() const;
  /// Inverse of parse(): "q" or "gf:<p>".
  std::string spec() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) noexcept : p_(p) {}
  std::int64_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator and residues in [0, p), so equal values compare equal
/// structurally.
class Scalar {
 public:
  /// Zero of `field`.
  explicit Scalar(Field field);

  static Scalar from_int(Field field, long value);
  /// For GF(p) the fraction is mapped through den^-1; throws DivisionByZero
  /// when p divides the denominator.
  static Scalar from_rational(Field field, const mpq_class& value);
  /// Accepts "n" or "n/d" with optional sign.
  static Scalar parse(Field field, std::string_view text);

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return from_int(field, 1); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for deterministic sorting; not the field order.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// "num/den" (den omitted when 1) over Q, decimal residue over GF(p).
  std::string to_string() const;

  /// Requires a rational field.
  const mpq_class& rational() const;
  /// Requires a prime field.
  std::int64_t residue() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::int64_t, mpq_class> value_;
};

}  // namespace starcheck
