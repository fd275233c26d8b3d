#include "tricover/resolution.hpp"

#include <algorithm>

namespace tricover {

namespace {

void require_finite(const Field& f, const char* what) {
  if (!f.is_finite()) {
    throw Error(ErrorCode::InfiniteFieldUnsupported, std::string(what) + " needs a finite field");
  }
}

bool all_zero(const std::array<Scalar, 3>& r) {
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::array<Scalar, 3> residuals_at(const CoverValues& cv, const AffineFiberPoint& x, const P1Point& dir) {
  const auto& f = x.z.field();
  const auto two = f.from_int(2);
  const auto &u = dir.u(), &v = dir.v();
  return {
      -v * (x.z + cv.a) + u * cv.b,
      -v * cv.c + u * (x.w + cv.d),
      -v * (x.w - two * cv.d) + u * (x.z - two * cv.a),
  };
}

bool on_cover(const CoverValues& cv, const AffineFiberPoint& x) { return all_zero(quadric_residuals(cv, x.z, x.w)); }

ScalarCubic cubic_at(const CoverValues& cv) {
  const auto& f = cv.a.field();
  return {cv.b, f.from_int(-3) * cv.a, f.from_int(3) * cv.d, -cv.c};
}

AffineFiberPoint lift_direction(const CoverValues& cv, const P1Point& dir) {
  const auto two = cv.a.field().from_int(2);
  const auto &u = dir.u(), &v = dir.v();
  Scalar z = v.is_zero() ? two * cv.a : cv.b * (u / v) - cv.a;
  Scalar w = u.is_zero() ? two * cv.d : cv.c * (v / u) - cv.d;
  return {z, w};
}

std::optional<P1Point> direction(const Scalar& u, const Scalar& v) {
  if (u.is_zero() && v.is_zero()) return std::nullopt;
  return P1Point(u, v);
}

std::array<std::optional<P1Point>, 3> expressions_at(const CoverValues& cv, const AffineFiberPoint& x) {
  const auto two = cv.a.field().from_int(2);
  return {
      direction(x.z + cv.a, cv.b),
      direction(cv.c, x.w + cv.d),
      direction(x.w - two * cv.d, x.z - two * cv.a),
  };
}

std::optional<P1Point> psi_at(const CoverValues& cv, const AffineFiberPoint& x) {
  for (auto& e : expressions_at(cv, x)) {
    if (e) return e;
  }
  return std::nullopt;
}

std::vector<AffineFiberPoint> scan_fiber(const CoverValues& cv) {
  const auto& f = cv.a.field();
  const auto p = f.characteristic();
  std::vector<AffineFiberPoint> out;
  for (std::uint64_t i = 0; i < p; ++i) {
    auto z = f.residue(i);
    for (std::uint64_t j = 0; j < p; ++j) {
      AffineFiberPoint x{z, f.residue(j)};
      if (on_cover(cv, x)) out.push_back(std::move(x));
    }
  }
  return out;  // already in canonical order
}

}  // namespace

std::array<Scalar, 3> gamma_residuals(const CoverData& cover, std::span<const Scalar> y, const AffineFiberPoint& x,
                                      const P1Point& dir) {
  return residuals_at(cover.at(y), x, dir);
}

std::array<Scalar, 3> gamma_residuals(const CoverData& cover, const GammaPoint& g) {
  return gamma_residuals(cover, g.base, g.zw, g.dir);
}

bool on_gamma(const CoverData& cover, const GammaPoint& g) { return all_zero(gamma_residuals(cover, g)); }

bool z_member(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir) {
  return cubic_at(cover.at(y))(dir.u(), dir.v()).is_zero();
}

std::pair<BasePoint, P1Point> phi(const CoverData& cover, const GammaPoint& g) {
  if (!on_gamma(cover, g)) {
    throw Error(ErrorCode::NotOnGamma, g.zw.to_string() + " x " + g.dir.to_string() + " is not on the resolution");
  }
  return {g.base, g.dir};
}

GammaPoint phi_inverse(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir) {
  const auto cv = cover.at(y);
  if (!cubic_at(cv)(dir.u(), dir.v()).is_zero()) {
    throw Error(ErrorCode::NotOnZ, dir.to_string() + " is not on the cubic");
  }
  return {BasePoint(y.begin(), y.end()), lift_direction(cv, dir), dir};
}

AffineFiberPoint rho_x(const CoverData& cover, std::span<const Scalar> y, const P1Point& dir) {
  return phi_inverse(cover, y, dir).zw;
}

std::array<std::optional<P1Point>, 3> psi_expressions(const CoverData& cover, std::span<const Scalar> y,
                                                      const AffineFiberPoint& x) {
  const auto cv = cover.at(y);
  if (!on_cover(cv, x)) throw Error(ErrorCode::NotOnFiber, x.to_string() + " is not in the fiber");
  return expressions_at(cv, x);
}

std::optional<P1Point> psi(const CoverData& cover, std::span<const Scalar> y, const AffineFiberPoint& x) {
  for (auto& e : psi_expressions(cover, y, x)) {
    if (e) return e;
  }
  return std::nullopt;
}

std::array<AlgebraElement, 3> psi_consensus(const CoverData& cover) {
  auto a = cover.lift(cover.a()), b = cover.lift(cover.b()), c = cover.lift(cover.c()), d = cover.lift(cover.d());
  auto z = cover.z(), w = cover.w();
  const auto two = cover.field().from_int(2);
  // Each expression is a pair [num : den]; two agree iff num1*den2 = num2*den1.
  const std::array<std::pair<MultiPoly, MultiPoly>, 3> exprs = {{
      {z + a, b},
      {c, w + d},
      {w - two * d, z - two * a},
  }};
  auto cross = [&](std::size_t i, std::size_t j) {
    return normal_form(exprs[i].first * exprs[j].second - exprs[i].second * exprs[j].first, cover);
  };
  return {cross(0, 1), cross(0, 2), cross(1, 2)};
}

std::vector<LineCheck> psi_line_oracle(const CoverData& cover, std::span<const Scalar> y) {
  auto xs = fiber_X(cover, y);
  if (xs.size() != 3) {
    throw Error(ErrorCode::FiberNotSplit, "fiber has " + std::to_string(xs.size()) + " rational points");
  }
  std::vector<LineCheck> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& xj = xs[(i + 1) % 3];
    const auto& xk = xs[(i + 2) % 3];
    P1Point line(-(xk.w - xj.w), xk.z - xj.z);
    auto value = psi(cover, y, xs[i]);
    if (!value) throw Error(ErrorCode::InvalidArgument, "psi indeterminate on an unramified fiber");
    out.push_back({xs[i], *value, line, *value == line});
  }
  return out;
}

std::vector<AffineFiberPoint> fiber_X(const CoverData& cover, std::span<const Scalar> y) {
  require_finite(cover.field(), "fiber_X");
  return scan_fiber(cover.at(y));
}

std::vector<P1Point> projective_line(const Field& field) {
  require_finite(field, "projective_line");
  std::vector<P1Point> out;
  for (std::uint64_t t = 0; t < field.characteristic(); ++t) out.emplace_back(field.one(), field.residue(t));
  out.emplace_back(field.zero(), field.one());
  return out;
}

std::vector<P1Point> fiber_Z(const CoverData& cover, std::span<const Scalar> y) {
  require_finite(cover.field(), "fiber_Z");
  auto form = cubic_at(cover.at(y));
  std::vector<P1Point> out;
  for (auto& q : projective_line(cover.field())) {
    if (form(q.u(), q.v()).is_zero()) out.push_back(std::move(q));
  }
  return out;
}

std::vector<GammaPoint> fiber_Gamma(const CoverData& cover, std::span<const Scalar> y) {
  require_finite(cover.field(), "fiber_Gamma");
  const auto cv = cover.at(y);
  const auto line = projective_line(cover.field());
  const auto& f = cover.field();
  std::vector<GammaPoint> out;
  for (std::uint64_t i = 0; i < f.characteristic(); ++i) {
    for (std::uint64_t j = 0; j < f.characteristic(); ++j) {
      AffineFiberPoint x{f.residue(i), f.residue(j)};
      for (const auto& dir : line) {
        if (all_zero(residuals_at(cv, x, dir))) out.push_back({BasePoint(y.begin(), y.end()), x, dir});
      }
    }
  }
  return out;
}

FiberReport fiber_report(const CoverData& cover, std::span<const Scalar> y) {
  require_finite(cover.field(), "fiber_report");
  const auto cv = cover.at(y);
  const auto form = cubic_at(cv);
  FiberReport r;
  r.base.assign(y.begin(), y.end());
  r.x_fiber = scan_fiber(cv);
  r.z_fiber = fiber_Z(cover, y);
  r.fat = cv.is_fat();
  r.cls = classify_cubic(form);

  if (r.fat) {
    const auto origin = AffineFiberPoint{cover.field().zero(), cover.field().zero()};
    r.laws_hold = r.x_fiber == std::vector<AffineFiberPoint>{origin} &&
                  r.z_fiber.size() == cover.field().characteristic() + 1 &&
                  std::all_of(r.z_fiber.begin(), r.z_fiber.end(),
                              [&](const P1Point& q) { return lift_direction(cv, q) == origin; });
    return r;
  }

  bool ok = r.x_fiber.size() == r.z_fiber.size();
  std::vector<P1Point> images;
  for (const auto& x : r.x_fiber) {
    auto q = psi_at(cv, x);
    if (!q || !form(q->u(), q->v()).is_zero()) {
      ok = false;
      r.multiplicities.push_back(0);
      continue;
    }
    ok = ok && lift_direction(cv, *q) == x;
    r.multiplicities.push_back(form.root_multiplicity(*q));
    images.push_back(*q);
  }
  std::sort(images.begin(), images.end());
  ok = ok && images == r.z_fiber;
  for (const auto& q : r.z_fiber) {
    auto back = psi_at(cv, lift_direction(cv, q));
    ok = ok && back && *back == q;
  }
  r.laws_hold = ok;
  return r;
}

FiberSum fiber_sum(const CoverData& cover, std::span<const Scalar> y) {
  auto report = fiber_report(cover, y);
  if (report.fat) throw Error(ErrorCode::InvalidArgument, "fiber sums are taken over non-fat fibers");
  const auto& f = cover.field();
  FiberSum s{false, {f.zero(), f.zero()}, {f.zero(), f.zero()}};
  int total = 0;
  for (std::size_t i = 0; i < report.x_fiber.size(); ++i) {
    const auto& x = report.x_fiber[i];
    const auto m = f.from_int(report.multiplicities[i]);
    s.plain.z += x.z;
    s.plain.w += x.w;
    s.weighted.z += m * x.z;
    s.weighted.w += m * x.w;
    total += report.multiplicities[i];
  }
  s.split = total == 3;
  return s;
}

std::vector<BasePoint> enumerate_base(const CoverData& cover, std::uint64_t limit) {
  require_finite(cover.field(), "base enumeration");
  const auto p = cover.field().characteristic();
  const auto n = cover.base_vars().size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > limit / p) {
      throw Error(ErrorCode::InvalidArgument, "base has more than " + std::to_string(limit) + " points");
    }
    count *= p;
  }
  std::vector<BasePoint> out;
  out.reserve(count);
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    BasePoint y;
    for (auto dgt : digits) y.push_back(cover.field().residue(dgt));
    out.push_back(std::move(y));
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace tricover
