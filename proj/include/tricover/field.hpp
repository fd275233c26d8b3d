#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "tricover/error.hpp"

namespace tricover {

class Scalar;

/// Ground field: either the rationals or a prime field F_p with p >= 5.
///
/// Characteristics 2 and 3 are rejected at construction because the cover
/// relations use the constants 2 and 3 and the cubic form of the cover's
/// invariant uses 1/2 and 1/6.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// Accepts exactly "Q" or "Fp:<decimal prime>".
  static Field parse(std::string_view descriptor);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_integer(const mpz_class& n) const;
  /// Throws RationalInFiniteField when den vanishes in the field.
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const;
  /// Residue r (reduced mod p); F_p only.
  Scalar residue(std::uint64_t r) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// Exact element of Q (lowest terms, positive denominator) or of F_p
/// (canonical residue in [0, p)).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue; F_p only.
  std::uint64_t residue() const;
  /// Rational value; Q only.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y);

  /// Total order used for canonical sorting: residue order in F_p, numeric
  /// order in Q. Not a field order.
  friend std::strong_ordering canonical_compare(const Scalar& x, const Scalar& y);

  /// "n" or "n/d" for Q, the residue in decimal for F_p.
  std::string to_string() const;
  /// True when to_string() starts with '-'.
  bool prints_negative() const;

 private:
  friend class Field;
  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tricover
