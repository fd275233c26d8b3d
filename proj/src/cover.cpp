#include "tricover/cover.hpp"

#include <map>
#include <utility>

#include "tricover/linalg.hpp"

namespace tricover {

namespace {

constexpr std::array<const char*, 4> kReserved = {"z", "w", "u", "v"};

// Coefficients of a fiber-ring polynomial grouped by (z,w) exponent,
// largest (z,w)-degree first, then larger z-power first.
struct ZwOrder {
  bool operator()(const std::pair<std::uint32_t, std::uint32_t>& x,
                  const std::pair<std::uint32_t, std::uint32_t>& y) const {
    auto dx = x.first + x.second;
    auto dy = y.first + y.second;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  }
};
using ZwTerms = std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly, ZwOrder>;

ZwTerms split_zw(const MultiPoly& p, const CoverData& cover) {
  const auto nb = cover.base_vars().size();
  ZwTerms out;
  for (const auto& [e, c] : p.terms()) {
    Exponent base(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nb));
    auto key = std::make_pair(e[cover.z_index()], e[cover.w_index()]);
    auto it = out.try_emplace(key, cover.field(), cover.base_vars()).first;
    it->second.add_term(base, c);
  }
  return out;
}

void accumulate(ZwTerms& terms, std::pair<std::uint32_t, std::uint32_t> key, const MultiPoly& coeff,
                const CoverData& cover) {
  if (coeff.is_zero()) return;
  auto it = terms.try_emplace(key, cover.field(), cover.base_vars()).first;
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

MultiPoly scaled(std::int64_t k, const MultiPoly& p) { return p.field().from_int(k) * p; }

// Tails of the three rewrite rules as AlgebraElements:
// z^2 -> 2(a^2 - bd) + a z + b w, zw -> (bc - ad) - d z - a w,
// w^2 -> 2(d^2 - ac) + c z + d w.
struct RewriteRules {
  AlgebraElement zz, zw, ww;
};

RewriteRules rewrite_rules(const CoverData& cv) {
  const auto &a = cv.a(), &b = cv.b(), &c = cv.c(), &d = cv.d();
  return {
      {scaled(2, a * a - b * d), a, b},
      {b * c - a * d, -d, -a},
      {scaled(2, d * d - a * c), c, d},
  };
}

}  // namespace

CoverData::CoverData(MultiPoly a, MultiPoly b, MultiPoly c, MultiPoly d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  for (const auto* p : {&b_, &c_, &d_}) {
    if (!(p->field() == a_.field())) throw Error(ErrorCode::FieldMismatch, "cover coefficients");
    if (!(p->vars() == a_.vars())) throw Error(ErrorCode::VariableMismatch, "cover coefficients");
  }
  for (const char* name : kReserved) {
    if (a_.vars().index_of(name)) {
      throw Error(ErrorCode::VariableMismatch, std::string("base variable name \"") + name + "\" is reserved");
    }
  }
  fiber_vars_ = a_.vars().extended({"z", "w"});
}

CoverData CoverData::universal(Field field) {
  VarList vars{"A", "B", "C", "D"};
  return CoverData(MultiPoly::variable(field, vars, "A"), MultiPoly::variable(field, vars, "B"),
                   MultiPoly::variable(field, vars, "C"), MultiPoly::variable(field, vars, "D"));
}

CoverData CoverData::constant(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  VarList none;
  const Field& f = a.field();
  return CoverData(MultiPoly::constant(f, none, a), MultiPoly::constant(f, none, b),
                   MultiPoly::constant(f, none, c), MultiPoly::constant(f, none, d));
}

CoverData CoverData::constant(Field field, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return constant(field.from_int(a), field.from_int(b), field.from_int(c), field.from_int(d));
}

MultiPoly CoverData::z() const { return MultiPoly::variable(field(), fiber_vars_, "z"); }
MultiPoly CoverData::w() const { return MultiPoly::variable(field(), fiber_vars_, "w"); }

MultiPoly CoverData::lift(const MultiPoly& base_poly) const {
  if (!(base_poly.vars() == base_vars())) throw Error(ErrorCode::VariableMismatch, "lift expects a base polynomial");
  MultiPoly r(field(), fiber_vars_);
  for (const auto& [e, c] : base_poly.terms()) {
    Exponent t = e;
    t.push_back(0);
    t.push_back(0);
    r.add_term(t, c);
  }
  return r;
}

BasePoint CoverData::base_point(const Assignment& values) const {
  BasePoint y;
  for (const auto& name : base_vars().names()) {
    auto it = values.find(name);
    if (it == values.end()) throw Error(ErrorCode::MissingAssignment, "no value for " + name);
    if (!(it->second.field() == field())) throw Error(ErrorCode::FieldMismatch, "value for " + name);
    y.push_back(it->second);
  }
  return y;
}

CoverValues CoverData::at(std::span<const Scalar> y) const {
  return {a_.eval(y), b_.eval(y), c_.eval(y), d_.eval(y)};
}

AlgebraElement AlgebraElement::unit(const CoverData& cv) {
  MultiPoly zero(cv.field(), cv.base_vars());
  return {MultiPoly::constant(cv.field(), cv.base_vars(), 1), zero, zero};
}

AlgebraElement AlgebraElement::z(const CoverData& cv) {
  MultiPoly zero(cv.field(), cv.base_vars());
  return {zero, MultiPoly::constant(cv.field(), cv.base_vars(), 1), zero};
}

AlgebraElement AlgebraElement::w(const CoverData& cv) {
  MultiPoly zero(cv.field(), cv.base_vars());
  return {zero, zero, MultiPoly::constant(cv.field(), cv.base_vars(), 1)};
}

std::string AlgebraElement::to_string() const {
  return "(" + p0.to_string() + ", " + p1.to_string() + ", " + p2.to_string() + ")";
}

MultiPoly DetMatrix::minor(std::size_t i, std::size_t j) const {
  return rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
}

std::array<std::array<Scalar, 2>, 3> DetMatrix::eval(std::span<const Scalar> fiber_point) const {
  std::array<std::array<Scalar, 2>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = rows[i][j].eval(fiber_point);
  }
  return out;
}

Scalar ScalarCubic::operator()(const Scalar& u, const Scalar& v) const {
  auto u2 = u * u;
  auto v2 = v * v;
  return c3 * u2 * u + c2 * u2 * v + c1 * u * v2 + c0 * v2 * v;
}

UniPoly ScalarCubic::dehomogenized() const { return UniPoly(c3.field(), {c3, c2, c1, c0}); }

int ScalarCubic::root_multiplicity(const P1Point& point) const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "root multiplicity on the zero form");
  auto f = dehomogenized();
  if (point.at_infinity()) return 3 - f.degree();
  return f.root_multiplicity(point.v());
}

ScalarCubic BinaryCubic::at(std::span<const Scalar> y) const {
  return {c3.eval(y), c2.eval(y), c1.eval(y), c0.eval(y)};
}

std::string BinaryCubic::to_string() const {
  const auto& base = c3.vars();
  auto ring = base.extended({"u", "v"});
  MultiPoly form(c3.field(), ring);
  const std::array<const MultiPoly*, 4> coeffs = {&c3, &c2, &c1, &c0};
  for (std::uint32_t k = 0; k < 4; ++k) {
    for (const auto& [e, c] : coeffs[k]->terms()) {
      Exponent t = e;
      t.push_back(3 - k);
      t.push_back(k);
      form.add_term(t, c);
    }
  }
  return form.to_string();
}

std::array<MultiPoly, 3> build_quadrics(const CoverData& cv) {
  auto a = cv.lift(cv.a()), b = cv.lift(cv.b()), c = cv.lift(cv.c()), d = cv.lift(cv.d());
  auto z = cv.z(), w = cv.w();
  return {
      z * z - a * z - b * w - scaled(2, a * a - b * d),
      z * w + d * z + a * w - (b * c - a * d),
      w * w - c * z - d * w - scaled(2, d * d - a * c),
  };
}

std::array<Scalar, 3> quadric_residuals(const CoverValues& v, const Scalar& z, const Scalar& w) {
  const auto two = z.field().from_int(2);
  return {
      z * z - v.a * z - v.b * w - two * (v.a * v.a - v.b * v.d),
      z * w + v.d * z + v.a * w - (v.b * v.c - v.a * v.d),
      w * w - v.c * z - v.d * w - two * (v.d * v.d - v.a * v.c),
  };
}

AlgebraElement normal_form(const MultiPoly& p, const CoverData& cv, RewriteOrder order) {
  if (!(p.vars() == cv.fiber_vars())) throw Error(ErrorCode::VariableMismatch, "normal_form expects a fiber-ring polynomial");
  const auto rules = rewrite_rules(cv);
  auto terms = split_zw(p, cv);

  // Rewrites x^i y^j C using the rule for the chosen quadratic monomial m,
  // where x^i y^j = m * rest.
  auto apply = [&](std::uint32_t i, std::uint32_t j, const MultiPoly& coeff, std::uint32_t di, std::uint32_t dj,
                   const AlgebraElement& tail) {
    const std::uint32_t ri = i - di, rj = j - dj;
    accumulate(terms, {ri, rj}, coeff * tail.p0, cv);
    accumulate(terms, {ri + 1, rj}, coeff * tail.p1, cv);
    accumulate(terms, {ri, rj + 1}, coeff * tail.p2, cv);
  };

  for (;;) {
    // Highest (z,w)-degree first; ties broken by the rule preference below.
    auto it = terms.begin();
    if (it == terms.end() || it->first.first + it->first.second <= 1) break;
    if (order == RewriteOrder::WFirst) {
      const auto top = it->first.first + it->first.second;
      auto last = it;
      for (auto jt = it; jt != terms.end() && jt->first.first + jt->first.second == top; ++jt) last = jt;
      it = last;
    }
    auto [i, j] = it->first;
    MultiPoly coeff = std::move(it->second);
    terms.erase(it);
    const bool z_first = order == RewriteOrder::ZFirst;
    if (z_first ? i >= 2 : j >= 2) {
      if (z_first) {
        apply(i, j, coeff, 2, 0, rules.zz);
      } else {
        apply(i, j, coeff, 0, 2, rules.ww);
      }
    } else if (i >= 1 && j >= 1) {
      apply(i, j, coeff, 1, 1, rules.zw);
    } else if (z_first) {
      apply(i, j, coeff, 0, 2, rules.ww);
    } else {
      apply(i, j, coeff, 2, 0, rules.zz);
    }
  }

  MultiPoly zero(cv.field(), cv.base_vars());
  AlgebraElement out{zero, zero, zero};
  for (auto& [key, coeff] : terms) {
    if (key == std::make_pair(0u, 0u)) out.p0 = std::move(coeff);
    else if (key == std::make_pair(1u, 0u)) out.p1 = std::move(coeff);
    else out.p2 = std::move(coeff);
  }
  return out;
}

MultiPoly to_poly(const AlgebraElement& x, const CoverData& cv) {
  return cv.lift(x.p0) + cv.lift(x.p1) * cv.z() + cv.lift(x.p2) * cv.w();
}

AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y, const CoverData& cv) {
  return normal_form(to_poly(x, cv) * to_poly(y, cv), cv);
}

MultiPoly trace(const AlgebraElement& x, const CoverData& cv) {
  // Columns of the multiplication matrix are x*1, x*z, x*w in basis {1,z,w}.
  auto col_one = alg_mul(x, AlgebraElement::unit(cv), cv);
  auto col_z = alg_mul(x, AlgebraElement::z(cv), cv);
  auto col_w = alg_mul(x, AlgebraElement::w(cv), cv);
  return col_one.p0 + col_z.p1 + col_w.p2;
}

DetMatrix det_matrix(const CoverData& cv) {
  auto a = cv.lift(cv.a()), b = cv.lift(cv.b()), c = cv.lift(cv.c()), d = cv.lift(cv.d());
  auto z = cv.z(), w = cv.w();
  return {{{
      {z + a, b},
      {c, w + d},
      {w - scaled(2, d), z - scaled(2, a)},
  }}};
}

bool MinorsReport::all_zero() const {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!reduced[k].is_zero() || !quadric_residuals[k].is_zero()) return false;
  }
  return true;
}

MinorsReport minors_check(const CoverData& cv) {
  auto m = det_matrix(cv);
  auto q = build_quadrics(cv);
  std::array<MultiPoly, 3> minors = {m.minor(0, 1), m.minor(0, 2), m.minor(1, 2)};
  return {
      minors,
      {normal_form(minors[0], cv), normal_form(minors[1], cv), normal_form(minors[2], cv)},
      {q[1] - minors[0], q[0] - minors[1], q[2] + minors[2]},
  };
}

bool is_fat_base_point(const CoverData& cv, std::span<const Scalar> y) { return cv.at(y).is_fat(); }

bool is_fat_base_point(const CoverData& cv, const Assignment& y) {
  auto point = cv.base_point(y);
  return is_fat_base_point(cv, point);
}

BinaryCubic z_cubic(const CoverData& cv) {
  return {cv.b(), scaled(-3, cv.a()), scaled(3, cv.d()), -cv.c()};
}

SigmaReport sigma_cubic(const CoverData& cv) {
  const auto& f = cv.field();
  auto sixth = f.from_rational(1, 6);
  auto half = f.from_rational(1, 2);
  SigmaReport report{{(-sixth) * cv.b(), half * cv.a(), (-half) * cv.d(), sixth * cv.c()}, std::nullopt, false};

  auto z = z_cubic(cv);
  const std::array<std::pair<const MultiPoly*, const MultiPoly*>, 4> pairs = {{
      {&report.sigma.c3, &z.c3},
      {&report.sigma.c2, &z.c2},
      {&report.sigma.c1, &z.c1},
      {&report.sigma.c0, &z.c0},
  }};
  for (const auto& [s, zc] : pairs) {
    if (zc->is_zero()) continue;
    const auto& [exp, coeff] = *zc->terms().begin();
    report.lambda = s->coefficient(exp) / coeff;
    break;
  }
  if (report.lambda) {
    report.proportional = (report.sigma - *report.lambda * z).is_zero();
  } else {
    report.proportional = report.sigma.is_zero();
  }
  return report;
}

BinaryCubic derive_local_cubic(const CoverData& cv) {
  const auto& base = cv.base_vars();
  const auto n = base.size();
  auto ring = cv.fiber_vars().extended({"u", "v"});
  const std::size_t zi = n, wi = n + 1, ui = n + 2, vi = n + 3;
  auto u = MultiPoly::variable(cv.field(), ring, "u");
  auto v = MultiPoly::variable(cv.field(), ring, "v");
  auto lift = [&](const MultiPoly& p) { return p.embed(ring); };

  auto m = det_matrix(cv);
  auto row3 = -v * lift(m.rows[2][0]) + u * lift(m.rows[2][1]);

  // uv * row3 with z -> b(u/v) - a and w -> c(v/u) - d; the row is affine
  // in (z, w), so each term picks up exactly one factor of uv.
  auto uv_z = lift(cv.b()) * u * u - lift(cv.a()) * u * v;
  auto uv_w = lift(cv.c()) * v * v - lift(cv.d()) * u * v;
  MultiPoly cleared(cv.field(), ring);
  for (const auto& [e, c] : row3.terms()) {
    Exponent rest = e;
    rest[zi] = rest[wi] = 0;
    auto mono = MultiPoly::monomial(cv.field(), ring, rest, c);
    if (e[zi] == 1) {
      cleared += mono * uv_z;
    } else if (e[wi] == 1) {
      cleared += mono * uv_w;
    } else {
      cleared += mono * u * v;
    }
  }

  BinaryCubic out{MultiPoly(cv.field(), base), MultiPoly(cv.field(), base), MultiPoly(cv.field(), base),
                  MultiPoly(cv.field(), base)};
  std::array<MultiPoly*, 4> slots = {&out.c3, &out.c2, &out.c1, &out.c0};
  for (const auto& [e, c] : cleared.terms()) {
    if (e[ui] + e[vi] != 3 || e[zi] != 0 || e[wi] != 0) {
      throw Error(ErrorCode::InvalidArgument, "cleared third-row equation is not a binary cubic");
    }
    Exponent be(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
    slots[e[vi]]->add_term(be, c);
  }
  return out;
}

namespace {

std::vector<Scalar> fiber_point(std::span<const Scalar> y, const Scalar& z, const Scalar& w) {
  std::vector<Scalar> pt(y.begin(), y.end());
  pt.push_back(z);
  pt.push_back(w);
  return pt;
}

void require_on_cover(const CoverData& cv, std::span<const Scalar> y, const Scalar& z, const Scalar& w) {
  for (const auto& r : quadric_residuals(cv.at(y), z, w)) {
    if (!r.is_zero()) throw Error(ErrorCode::NotOnVariety, "(" + z.to_string() + "," + w.to_string() + ") is not on the cover");
  }
}

}  // namespace

std::size_t jacobian_rank_X(const CoverData& cv, std::span<const Scalar> y, const Scalar& z, const Scalar& w) {
  require_on_cover(cv, y, z, w);
  auto pt = fiber_point(y, z, w);
  ScalarMatrix jac;
  for (const auto& q : build_quadrics(cv)) {
    std::vector<Scalar> row;
    for (std::size_t k = 0; k < cv.fiber_vars().size(); ++k) row.push_back(q.derivative(k).eval(pt));
    jac.push_back(std::move(row));
  }
  return matrix_rank(std::move(jac));
}

std::array<std::array<Scalar, 2>, 3> fiber_jacobian(const CoverData& cv, std::span<const Scalar> y, const Scalar& z,
                                                    const Scalar& w) {
  require_on_cover(cv, y, z, w);
  auto pt = fiber_point(y, z, w);
  auto q = build_quadrics(cv);
  std::array<std::array<Scalar, 2>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = {q[i].derivative(cv.z_index()).eval(pt), q[i].derivative(cv.w_index()).eval(pt)};
  }
  return out;
}

}  // namespace tricover
