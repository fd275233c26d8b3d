#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tricover/demos.hpp"

using namespace tricover;

TEST_CASE("projective point counts") {
  auto f = Field::prime(5);
  CHECK(projective_points(f, 1).size() == 6);
  CHECK(projective_points(f, 2).size() == 31);
  auto pts = projective_points(f, 2);
  for (const auto& pt : pts) {
    auto first = std::find_if(pt.begin(), pt.end(), [](const Scalar& s) { return !s.is_zero(); });
    REQUIRE(first != pt.end());
    CHECK(first->is_one());
  }
}

TEST_CASE("cone examples are well formed") {
  auto quad = ConeExample::quadric_cone();
  CHECK(quad.ambient_dim() == 4);
  CHECK(quad.x_equations(Field::prime(5)).size() == 1);
  CHECK(quad.gamma_equations(Field::prime(5)).size() == 3);
  auto segre = ConeExample::from_name("segre-cone");
  CHECK(segre.ambient_dim() == 6);
  CHECK(segre.x_equations(Field::prime(5)).size() == 3);
  CHECK(segre.gamma_equations(Field::prime(5)).size() == 6);
  CHECK_THROWS_AS(ConeExample::from_name("cusp"), Error);
}

// Closed forms: a cone over a variety V in P^(n-1) with |V| points has
// 1 + p|V| points; the resolution replaces the vertex by a line.
TEST_CASE("censuses match closed-form counts") {
  for (std::uint64_t p : {5, 7}) {
    auto quad = cone_census(ConeExample::quadric_cone(), p);
    const std::size_t quadric_surface = (p + 1) * (p + 1);
    CHECK(quad.x_points == 1 + p * quadric_surface);
    CHECK(quad.gamma_points == quad.x_points - 1 + (p + 1));
    CHECK(quad.vertex_fiber == p + 1);
    CHECK(quad.bijective_off_vertex);
    CHECK(quad.ok);

    auto segre = cone_census(ConeExample::segre_cone(), p);
    const std::size_t segre_variety = (p * p + p + 1) * (p + 1);
    CHECK(segre.x_points == 1 + p * segre_variety);
    CHECK(segre.gamma_points == segre.x_points - 1 + (p + 1));
    CHECK(segre.ok);
    CHECK(universal_fat_fiber_size(p) == p + 1);
  }
}

TEST_CASE("resolutions of the cones are smooth") {
  auto quad = cone_smoothness_probe(ConeExample::quadric_cone(), 5);
  CHECK(quad.expected_rank == 2);
  CHECK(quad.deficient.empty());
  CHECK(quad.ok);
  CHECK(quad.x_vertex_rank == 0);
  CHECK(quad.x_codimension == 1);
  auto segre = cone_smoothness_probe(ConeExample::segre_cone(), 5);
  CHECK(segre.expected_rank == 3);
  CHECK(segre.ok);
  CHECK(segre.x_codimension == 2);
}
