#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tricover/poly.hpp"

namespace tricover {

enum class ConeKind { QuadricCone, SegreCone };

/// A cone X in P^n given by the 2x2 minors of a matrix of coordinates, and
/// its resolution Gamma in P^n x P^1 cut out by the minors together with
/// the row equations matrix * (-v, u)^T = 0. The last coordinate t is the
/// cone direction, so the vertex is [0:...:0:1].
struct ConeExample {
  ConeKind kind;
  std::string name;
  /// Homogeneous coordinates of P^n (t last).
  std::vector<std::string> coords;
  /// matrix[i] = indices into coords of row i.
  std::vector<std::array<std::size_t, 2>> matrix;
  /// dim Gamma = dim X.
  std::size_t dimension;

  /// xw - yz in P^4 with matrix [[x, y], [z, w]].
  static ConeExample quadric_cone();
  /// Cone over P^2 x P^1 in P^6 with matrix [[x0, x1], [x2, x3], [x4, x5]].
  static ConeExample segre_cone();
  static ConeExample from_name(const std::string& name);

  std::size_t ambient_dim() const { return coords.size() - 1; }
  /// Variables: coords followed by u, v.
  VarList ring() const;
  std::vector<MultiPoly> x_equations(const Field& field) const;
  std::vector<MultiPoly> gamma_equations(const Field& field) const;
};

struct CensusReport {
  std::uint64_t p = 0;
  std::size_t x_points = 0;
  std::size_t gamma_points = 0;
  std::size_t vertex_fiber = 0;
  /// preimage count -> number of non-vertex points of X with that count
  std::map<std::size_t, std::size_t> fiber_tally;
  bool bijective_off_vertex = false;
  bool ok = false;  // bijective off the vertex and p+1 points over it
};

CensusReport cone_census(const ConeExample& example, std::uint64_t p);

struct SmoothnessReport {
  std::uint64_t p = 0;
  std::size_t gamma_points = 0;
  std::size_t expected_rank = 0;  // codimension of Gamma in P^n x P^1
  std::vector<std::string> deficient;
  std::size_t x_vertex_rank = 0;
  std::size_t x_codimension = 0;
  bool ok = false;  // no deficient point on Gamma
};

SmoothnessReport cone_smoothness_probe(const ConeExample& example, std::uint64_t p);

/// Points of P^n(F_p), canonical representatives (first nonzero entry 1).
std::vector<std::vector<Scalar>> projective_points(const Field& field, std::size_t n);

/// Size of the resolution fiber over the fat point of the universal cover.
std::size_t universal_fat_fiber_size(std::uint64_t p);

}  // namespace tricover
