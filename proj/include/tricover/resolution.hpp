#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricover/classify.hpp"
#include "tricover/cover.hpp"

namespace tricover {

/// Fiber coordinates (z, w) of a point of the cover over a base point.
struct AffineFiberPoint {
  Scalar z, w;

  friend bool operator==(const AffineFiberPoint&, const AffineFiberPoint&) = default;
  friend std::strong_ordering operator<=>(const AffineFiberPoint& x, const AffineFiberPoint& y) {
    if (auto c = canonical_compare(x.z, y.z); c != 0) return c;
    return canonical_compare(x.w, y.w);
  }
  std::string to_string() const { return "(" + z.to_string() + "," + w.to_string() + ")"; }
};

/// Point of the resolution: base point, fiber point and direction [u:v]
/// with det_matrix * (-v, u)^T = 0.
struct GammaPoint {
  BasePoint base;
  AffineFiberPoint zw;
  P1Point dir;
};

/// (-v(z+a) + ub, -vc + u(w+d), -v(w-2d) + u(z-2a)) at the point.
std::array<Scalar, 3> gamma_residuals(const CoverData& cover, std::span<const Scalar> y,
                                      const AffineFiberPoint& x, const P1Point& dir);
std::array<Scalar, 3> gamma_residuals(const CoverData& cover, const GammaPoint& g);
bool on_gamma(const CoverData& cover, const GammaPoint& g);

/// Whether [u:v] lies on the cubic b u^3 - 3a u^2 v + 3d u v^2 - c v^3 over y.
bool z_member(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir);

/// Forgets (z, w). Throws NotOnGamma off the resolution.
std::pair<BasePoint, P1Point> phi(const CoverData& cover, const GammaPoint& g);

/// z = b u/v - a (or 2a when v = 0), w = c v/u - d (or 2d when u = 0).
/// Throws NotOnZ when dir is not on the cubic over y.
GammaPoint phi_inverse(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir);

/// The resolution morphism on points: the (z, w) part of phi_inverse.
AffineFiberPoint rho_x(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir);

/// The line map: first well-defined of [z+a : b], [c : w+d], [w-2d : z-2a].
/// Empty (indeterminate) exactly when all six entries vanish. Throws
/// NotOnFiber when x is not on the cover over y.
std::optional<P1Point> psi(const CoverData& cover, std::span<const Scalar> y, const AffineFiberPoint& x);

/// All three expressions for psi at x (entries that are [0:0] are empty).
std::array<std::optional<P1Point>, 3> psi_expressions(const CoverData& cover, std::span<const Scalar> y,
                                                      const AffineFiberPoint& x);

/// Cross-products of the three psi expressions taken pairwise, reduced
/// modulo the quadrics: (z+a)(w+d) - bc, (z+a)(z-2a) - b(w-2d) and
/// c(z-2a) - (w+d)(w-2d). All vanish when the expressions agree on the cover.
std::array<AlgebraElement, 3> psi_consensus(const CoverData& cover);

struct LineCheck {
  AffineFiberPoint point;
  P1Point psi_value;
  P1Point line_direction;  // [-(w_k - w_j) : z_k - z_j] from the other two points
  bool match;
};

/// Compares psi against the line through the other two fiber points.
/// Throws FiberNotSplit unless the fiber has three rational points.
std::vector<LineCheck> psi_line_oracle(const CoverData& cover, std::span<const Scalar> y);

/// Exhaustive scan of F_p^2, sorted. Throws InfiniteFieldUnsupported over Q.
std::vector<AffineFiberPoint> fiber_X(const CoverData& cover, std::span<const Scalar> y);
/// Points of P^1(F_p) on the cubic, sorted (all p+1 when it vanishes).
std::vector<P1Point> fiber_Z(const CoverData& cover, std::span<const Scalar> y);
/// Exhaustive scan of F_p^2 x P^1(F_p) for points of the resolution.
std::vector<GammaPoint> fiber_Gamma(const CoverData& cover, std::span<const Scalar> y);

/// P^1(F_p) in canonical order.
std::vector<P1Point> projective_line(const Field& field);

struct FiberReport {
  BasePoint base;
  std::vector<AffineFiberPoint> x_fiber;
  std::vector<P1Point> z_fiber;
  /// Root multiplicity of psi(x) for each x in x_fiber (empty when fat).
  std::vector<int> multiplicities;
  bool fat = false;
  RamificationClass cls = RamificationClass::Unramified;
  /// Non-fat: psi maps x_fiber onto z_fiber and rho_x inverts it.
  /// Fat: x_fiber = {(0,0)}, z_fiber = P^1(F_p) and rho_x collapses it.
  bool laws_hold = false;
};

FiberReport fiber_report(const CoverData& cover, std::span<const Scalar> y);

struct FiberSum {
  /// Rational root multiplicities of the cubic add up to 3.
  bool split = false;
  AffineFiberPoint plain;     // sum of the distinct rational points
  AffineFiberPoint weighted;  // sum weighted by multiplicity
};

/// Coordinate sums over a non-fat fiber. Since z and w have trace zero, the
/// weighted sum is (0,0) whenever the cubic splits over F_p, and the plain
/// sum agrees with it on unramified fibers.
FiberSum fiber_sum(const CoverData& cover, std::span<const Scalar> y);

/// All points of F_p^n for the cover's base, in lexicographic order.
/// Throws InvalidArgument when p^n exceeds `limit`.
std::vector<BasePoint> enumerate_base(const CoverData& cover, std::uint64_t limit);

}  // namespace tricover
