#pragma once

#include <vector>

#include "tricover/field.hpp"

namespace tricover {

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly(Field field, std::vector<Scalar> coeffs);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Scalar operator()(const Scalar& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  /// Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Order of vanishing at t (0 when f(t) != 0). f must be nonzero.
  int root_multiplicity(const Scalar& t) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly x, UniPoly y);

}  // namespace tricover
