#include "tricover/demos.hpp"

#include <algorithm>

#include "tricover/cover.hpp"
#include "tricover/linalg.hpp"
#include "tricover/resolution.hpp"

namespace tricover {

ConeExample ConeExample::quadric_cone() {
  return {ConeKind::QuadricCone, "quadric-cone", {"x", "y", "z", "w", "t"}, {{0, 1}, {2, 3}}, 3};
}

ConeExample ConeExample::segre_cone() {
  return {ConeKind::SegreCone, "segre-cone", {"x0", "x1", "x2", "x3", "x4", "x5", "t"}, {{0, 1}, {2, 3}, {4, 5}}, 4};
}

ConeExample ConeExample::from_name(const std::string& name) {
  if (name == "quadric-cone") return quadric_cone();
  if (name == "segre-cone") return segre_cone();
  throw Error(ErrorCode::InvalidArgument, "unknown example \"" + name + "\"");
}

VarList ConeExample::ring() const {
  auto names = coords;
  names.push_back("u");
  names.push_back("v");
  return VarList(std::move(names));
}

std::vector<MultiPoly> ConeExample::x_equations(const Field& field) const {
  auto vars = ring();
  auto entry = [&](std::size_t i, std::size_t j) {
    return MultiPoly::variable(field, vars, coords[matrix[i][j]]);
  };
  std::vector<MultiPoly> eqs;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix.size(); ++j) {
      eqs.push_back(entry(i, 0) * entry(j, 1) - entry(i, 1) * entry(j, 0));
    }
  }
  return eqs;
}

std::vector<MultiPoly> ConeExample::gamma_equations(const Field& field) const {
  auto vars = ring();
  auto eqs = x_equations(field);
  auto u = MultiPoly::variable(field, vars, "u");
  auto v = MultiPoly::variable(field, vars, "v");
  for (const auto& row : matrix) {
    eqs.push_back(-v * MultiPoly::variable(field, vars, coords[row[0]]) +
                  u * MultiPoly::variable(field, vars, coords[row[1]]));
  }
  return eqs;
}

std::vector<std::vector<Scalar>> projective_points(const Field& field, std::size_t n) {
  const auto p = field.characteristic();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t lead = 0; lead <= n; ++lead) {
    const std::size_t free = n - lead;
    std::vector<std::uint64_t> digits(free, 0);
    for (;;) {
      std::vector<Scalar> pt(lead, field.zero());
      pt.push_back(field.one());
      for (auto dgt : digits) pt.push_back(field.residue(dgt));
      out.push_back(std::move(pt));
      std::size_t i = free;
      while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

namespace {

bool satisfies(const std::vector<MultiPoly>& eqs, std::span<const Scalar> pt) {
  return std::all_of(eqs.begin(), eqs.end(), [&](const MultiPoly& e) { return e.eval(pt).is_zero(); });
}

bool is_vertex(std::span<const Scalar> x) {
  return std::all_of(x.begin(), x.end() - 1, [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> with_direction(std::span<const Scalar> x, const P1Point& dir) {
  std::vector<Scalar> pt(x.begin(), x.end());
  pt.push_back(dir.u());
  pt.push_back(dir.v());
  return pt;
}

struct RationalPoints {
  std::vector<std::vector<Scalar>> x;
  // gamma[i] = directions over x[i]
  std::vector<std::vector<P1Point>> gamma;
};

RationalPoints enumerate(const ConeExample& ex, const Field& field) {
  const auto x_eqs = ex.x_equations(field);
  const auto g_eqs = ex.gamma_equations(field);
  const auto line = projective_line(field);
  const std::vector<Scalar> unused{field.zero(), field.zero()};
  RationalPoints pts;
  for (auto& x : projective_points(field, ex.ambient_dim())) {
    auto probe = x;
    probe.insert(probe.end(), unused.begin(), unused.end());
    if (!satisfies(x_eqs, probe)) continue;
    std::vector<P1Point> dirs;
    for (const auto& dir : line) {
      if (satisfies(g_eqs, with_direction(x, dir))) dirs.push_back(dir);
    }
    pts.x.push_back(std::move(x));
    pts.gamma.push_back(std::move(dirs));
  }
  return pts;
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& eqs, std::span<const Scalar> pt) {
  ScalarMatrix jac;
  for (const auto& e : eqs) {
    std::vector<Scalar> row;
    for (std::size_t k = 0; k < pt.size(); ++k) row.push_back(e.derivative(k).eval(pt));
    jac.push_back(std::move(row));
  }
  return matrix_rank(std::move(jac));
}

std::string point_label(std::span<const Scalar> x, const P1Point& dir) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ":" : "") + x[i].to_string();
  return s + "] x " + dir.to_string();
}

}  // namespace

CensusReport cone_census(const ConeExample& example, std::uint64_t p) {
  const auto field = Field::prime(p);
  const auto pts = enumerate(example, field);
  CensusReport r;
  r.p = p;
  r.x_points = pts.x.size();
  bool bijective = true;
  for (std::size_t i = 0; i < pts.x.size(); ++i) {
    const auto n = pts.gamma[i].size();
    r.gamma_points += n;
    if (is_vertex(pts.x[i])) {
      r.vertex_fiber = n;
    } else {
      ++r.fiber_tally[n];
      bijective = bijective && n == 1;
    }
  }
  r.bijective_off_vertex = bijective;
  r.ok = bijective && r.vertex_fiber == p + 1;
  return r;
}

SmoothnessReport cone_smoothness_probe(const ConeExample& example, std::uint64_t p) {
  const auto field = Field::prime(p);
  const auto pts = enumerate(example, field);
  const auto g_eqs = example.gamma_equations(field);
  const auto x_eqs = example.x_equations(field);
  const auto n = example.ambient_dim();

  // Ranks are taken with respect to all homogeneous coordinates; by the
  // Euler relation this equals the rank in any affine chart through the
  // point, so full rank means smooth there.
  SmoothnessReport r;
  r.p = p;
  r.expected_rank = n + 1 - example.dimension;
  r.x_codimension = n - example.dimension;
  for (std::size_t i = 0; i < pts.x.size(); ++i) {
    for (const auto& dir : pts.gamma[i]) {
      ++r.gamma_points;
      if (jacobian_rank(g_eqs, with_direction(pts.x[i], dir)) != r.expected_rank) {
        r.deficient.push_back(point_label(pts.x[i], dir));
      }
    }
  }
  std::vector<Scalar> vertex(n, field.zero());
  vertex.push_back(field.one());
  r.x_vertex_rank = jacobian_rank(x_eqs, with_direction(vertex, P1Point(field.one(), field.zero())));
  r.ok = r.deficient.empty();
  return r;
}

std::size_t universal_fat_fiber_size(std::uint64_t p) {
  const auto field = Field::prime(p);
  const auto cover = CoverData::universal(field);
  const BasePoint origin(4, field.zero());
  return fiber_Gamma(cover, origin).size();
}

}  // namespace tricover
