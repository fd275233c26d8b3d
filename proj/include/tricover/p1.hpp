#pragma once

#include <compare>
#include <string>

#include "tricover/field.hpp"

namespace tricover {

/// Point [u:v] of the projective line, stored as its canonical
/// representative: [1:v/u] when u != 0, otherwise [0:1].
class P1Point {
 public:
  /// Throws InvalidArgument when u = v = 0.
  P1Point(const Scalar& u, const Scalar& v);

  const Scalar& u() const noexcept { return u_; }
  const Scalar& v() const noexcept { return v_; }
  bool at_infinity() const noexcept { return u_.is_zero(); }

  friend bool operator==(const P1Point&, const P1Point&) = default;
  /// [1:t] ordered by t, then [0:1] last.
  friend std::strong_ordering operator<=>(const P1Point& x, const P1Point& y);

  std::string to_string() const;

 private:
  Scalar u_, v_;
};

}  // namespace tricover
