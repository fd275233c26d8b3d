#include "tricover/p1.hpp"

namespace tricover {

P1Point::P1Point(const Scalar& u, const Scalar& v) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a point of P^1");
  if (!(u.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "P^1 coordinates");
  if (u.is_zero()) {
    u_ = u;
    v_ = u.field().one();
  } else {
    u_ = u.field().one();
    v_ = v / u;
  }
}

std::strong_ordering operator<=>(const P1Point& x, const P1Point& y) {
  if (x.at_infinity() != y.at_infinity()) {
    return x.at_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (x.at_infinity()) return std::strong_ordering::equal;
  return canonical_compare(x.v_, y.v_);
}

std::string P1Point::to_string() const { return "[" + u_.to_string() + ":" + v_.to_string() + "]"; }

}  // namespace tricover
