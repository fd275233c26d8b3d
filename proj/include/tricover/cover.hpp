#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricover/p1.hpp"
#include "tricover/poly.hpp"
#include "tricover/univariate.hpp"

namespace tricover {

/// Values of the base variables, aligned with CoverData::base_vars().
using BasePoint = std::vector<Scalar>;

/// The cover datum (a, b, c, d) specialized at one base point.
struct CoverValues {
  Scalar a, b, c, d;
  bool is_fat() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
};

/// A triple cover given locally by four regular functions a, b, c, d on the
/// base. The cover is cut out of base x A^2 (fiber coordinates z, w) by
///   z^2 = a z + b w + 2(a^2 - b d)
///   z w = -d z - a w + (b c - a d)
///   w^2 = c z + d w + 2(d^2 - a c).
class CoverData {
 public:
  /// All four polynomials must share field and variables. The names z, w, u
  /// and v are reserved for fiber and projective coordinates.
  CoverData(MultiPoly a, MultiPoly b, MultiPoly c, MultiPoly d);

  /// Base A^4 with coordinates A, B, C, D and (a, b, c, d) = (A, B, C, D).
  static CoverData universal(Field field);
  /// Cover over a point.
  static CoverData constant(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
  static CoverData constant(Field field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  const Field& field() const noexcept { return a_.field(); }
  const VarList& base_vars() const noexcept { return a_.vars(); }
  const MultiPoly& a() const noexcept { return a_; }
  const MultiPoly& b() const noexcept { return b_; }
  const MultiPoly& c() const noexcept { return c_; }
  const MultiPoly& d() const noexcept { return d_; }

  /// base_vars followed by z, w.
  const VarList& fiber_vars() const noexcept { return fiber_vars_; }
  std::size_t z_index() const noexcept { return base_vars().size(); }
  std::size_t w_index() const noexcept { return base_vars().size() + 1; }
  MultiPoly z() const;
  MultiPoly w() const;
  /// Embeds a base polynomial into the fiber ring.
  MultiPoly lift(const MultiPoly& base_poly) const;

  /// Orders an assignment by base_vars (MissingAssignment when incomplete).
  BasePoint base_point(const Assignment& values) const;
  CoverValues at(std::span<const Scalar> y) const;

  friend bool operator==(const CoverData& x, const CoverData& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  MultiPoly a_, b_, c_, d_;
  VarList fiber_vars_;
};

/// p0 + p1 z + p2 w with base-polynomial coefficients: the unique
/// representative of an element of the rank-3 cover algebra.
struct AlgebraElement {
  MultiPoly p0, p1, p2;

  static AlgebraElement unit(const CoverData& cover);
  static AlgebraElement z(const CoverData& cover);
  static AlgebraElement w(const CoverData& cover);

  bool is_zero() const { return p0.is_zero() && p1.is_zero() && p2.is_zero(); }
  AlgebraElement operator-(const AlgebraElement& y) const { return {p0 - y.p0, p1 - y.p1, p2 - y.p2}; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  std::string to_string() const;
};

/// Rows (z+a, b), (c, w+d), (w-2d, z-2a) over the fiber ring.
struct DetMatrix {
  std::array<std::array<MultiPoly, 2>, 3> rows;

  /// rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0].
  MultiPoly minor(std::size_t i, std::size_t j) const;
  std::array<std::array<Scalar, 2>, 3> eval(std::span<const Scalar> fiber_point) const;
};

/// Binary cubic form in values: c3 u^3 + c2 u^2 v + c1 u v^2 + c0 v^3.
struct ScalarCubic {
  Scalar c3, c2, c1, c0;

  Scalar operator()(const Scalar& u, const Scalar& v) const;
  bool is_zero() const { return c3.is_zero() && c2.is_zero() && c1.is_zero() && c0.is_zero(); }
  /// f(t) = F(1, t), so the root [1:t] of F is the root t of f.
  UniPoly dehomogenized() const;
  /// Order of vanishing of a nonzero form at a point of P^1.
  int root_multiplicity(const P1Point& point) const;
};

/// Binary cubic form with base-polynomial coefficients.
struct BinaryCubic {
  MultiPoly c3, c2, c1, c0;

  ScalarCubic at(std::span<const Scalar> y) const;
  bool is_zero() const { return c3.is_zero() && c2.is_zero() && c1.is_zero() && c0.is_zero(); }
  BinaryCubic operator-(const BinaryCubic& y) const { return {c3 - y.c3, c2 - y.c2, c1 - y.c1, c0 - y.c0}; }
  friend BinaryCubic operator*(const Scalar& s, const BinaryCubic& x) {
    return {s * x.c3, s * x.c2, s * x.c1, s * x.c0};
  }
  friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
  /// The form as a polynomial in u, v over the base ring, printed.
  std::string to_string() const;
};

/// q1, q2, q3 as polynomials in the fiber ring (each vanishes on the cover).
std::array<MultiPoly, 3> build_quadrics(const CoverData& cover);

/// Residuals of the three quadrics at a fiber point over specialized data.
std::array<Scalar, 3> quadric_residuals(const CoverValues& v, const Scalar& z, const Scalar& w);

enum class RewriteOrder {
  ZFirst,  // z^2 before zw before w^2
  WFirst,  // w^2 before zw before z^2
};

/// Reduction modulo the quadrics. Each step rewrites a monomial of highest
/// (z,w)-degree, so the process stops once that degree is at most 1.
AlgebraElement normal_form(const MultiPoly& p, const CoverData& cover,
                           RewriteOrder order = RewriteOrder::ZFirst);

/// p0 + p1 z + p2 w in the fiber ring.
MultiPoly to_poly(const AlgebraElement& x, const CoverData& cover);

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y, const CoverData& cover);

/// Trace of multiplication by x on the free module with basis {1, z, w}.
MultiPoly trace(const AlgebraElement& x, const CoverData& cover);

DetMatrix det_matrix(const CoverData& cover);

struct MinorsReport {
  /// Minors of rows (1,2), (1,3), (2,3) as fiber-ring polynomials.
  std::array<MultiPoly, 3> minors;
  /// Their normal forms (all zero when the minors lie in the ideal).
  std::array<AlgebraElement, 3> reduced;
  /// q2 - M12, q1 - M13, q3 + M23 (all zero when the quadrics are minors).
  std::array<MultiPoly, 3> quadric_residuals;

  bool all_zero() const;
};

MinorsReport minors_check(const CoverData& cover);

bool is_fat_base_point(const CoverData& cover, std::span<const Scalar> y);
bool is_fat_base_point(const CoverData& cover, const Assignment& y);

/// (b, -3a, 3d, -c).
BinaryCubic z_cubic(const CoverData& cover);

struct SigmaReport {
  /// (-b/6, a/2, -d/2, c/6).
  BinaryCubic sigma;
  /// Scalar with sigma = lambda * z_cubic; empty when z_cubic vanishes
  /// identically (then any scalar works and `proportional` reports
  /// whether sigma vanishes too).
  std::optional<Scalar> lambda;
  bool proportional = false;
};

SigmaReport sigma_cubic(const CoverData& cover);

/// Substitutes z = b(u/v) - a, w = c(v/u) - d into the third-row equation
/// -v(w - 2d) + u(z - 2a) = 0 and clears the denominator uv.
BinaryCubic derive_local_cubic(const CoverData& cover);

/// Rank of the Jacobian of (q1, q2, q3) with respect to base_vars, z, w.
/// Throws NotOnVariety when the point does not satisfy the quadrics.
std::size_t jacobian_rank_X(const CoverData& cover, std::span<const Scalar> y, const Scalar& z, const Scalar& w);

/// The 3 x 2 matrix of partials of (q1, q2, q3) with respect to (z, w).
std::array<std::array<Scalar, 2>, 3> fiber_jacobian(const CoverData& cover, std::span<const Scalar> y,
                                                    const Scalar& z, const Scalar& w);

}  // namespace tricover
