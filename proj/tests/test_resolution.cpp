#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tricover/resolution.hpp"

using namespace tricover;

namespace {

std::vector<oracle::Pt> as_pairs(const std::vector<AffineFiberPoint>& xs) {
  std::vector<oracle::Pt> out;
  for (const auto& x : xs) out.push_back({x.z.residue(), x.w.residue()});
  return out;
}

std::vector<oracle::Dir> as_pairs(const std::vector<P1Point>& qs) {
  std::vector<oracle::Dir> out;
  for (const auto& q : qs) out.push_back({q.u().residue(), q.v().residue()});
  return out;
}

const std::vector<Scalar> kPoint;  // base of a constant cover

}  // namespace

TEST_CASE("cube roots cover over F_7") {
  auto f = Field::prime(7);
  auto cover = CoverData::constant(f, 0, 1, 1, 0);
  auto xs = fiber_X(cover, kPoint);
  CHECK(as_pairs(xs) == std::vector<oracle::Pt>{{1, 1}, {2, 4}, {4, 2}});
  auto zs = fiber_Z(cover, kPoint);
  CHECK(zs == std::vector<P1Point>{P1Point(f.one(), f.one()), P1Point(f.from_int(4), f.one()),
                                   P1Point(f.from_int(2), f.one())});
  CHECK(*psi(cover, kPoint, xs[0]) == P1Point(f.one(), f.one()));
  CHECK(rho_x(cover, kPoint, P1Point(f.from_int(2), f.one())) == AffineFiberPoint{f.from_int(2), f.from_int(4)});
  for (const auto& check : psi_line_oracle(cover, kPoint)) CHECK(check.match);
  auto sums = fiber_sum(cover, kPoint);
  CHECK(sums.split);
  CHECK(sums.plain == AffineFiberPoint{f.zero(), f.zero()});
}

TEST_CASE("double cover over F_7") {
  auto f = Field::prime(7);
  auto cover = CoverData::constant(f, 2, 0, 0, 0);
  auto r = fiber_report(cover, kPoint);
  CHECK(as_pairs(r.x_fiber) == std::vector<oracle::Pt>{{4, 0}, {5, 0}});
  CHECK(as_pairs(r.z_fiber) == std::vector<oracle::Dir>{{1, 0}, {0, 1}});
  CHECK(r.cls == RamificationClass::SimpleDouble);
  CHECK(r.multiplicities == std::vector<int>{1, 2});
  CHECK(r.laws_hold);
  AffineFiberPoint four{f.from_int(4), f.zero()}, five{f.from_int(5), f.zero()};
  CHECK(*psi(cover, kPoint, four) == P1Point(f.one(), f.zero()));
  CHECK(*psi(cover, kPoint, five) == P1Point(f.zero(), f.one()));
  auto exprs = psi_expressions(cover, kPoint, five);
  CHECK(!exprs[0]);
  CHECK(!exprs[1]);
  CHECK(*exprs[2] == P1Point(f.zero(), f.one()));
  auto sums = fiber_sum(cover, kPoint);
  CHECK(sums.split);
  CHECK(sums.weighted == AffineFiberPoint{f.zero(), f.zero()});
  CHECK(!(sums.plain == sums.weighted));
  CHECK_THROWS_AS(psi_line_oracle(cover, kPoint), Error);
}

TEST_CASE("fat cover over F_5") {
  auto f = Field::prime(5);
  auto cover = CoverData::constant(f, 0, 0, 0, 0);
  auto r = fiber_report(cover, kPoint);
  CHECK(r.fat);
  CHECK(r.x_fiber.size() == 1);
  CHECK(r.z_fiber.size() == 6);
  CHECK(r.laws_hold);
  CHECK(!psi(cover, kPoint, r.x_fiber[0]));
  CHECK(fiber_Gamma(cover, kPoint).size() == 6);
  CHECK_THROWS_AS(fiber_sum(cover, kPoint), Error);
}

TEST_CASE("fibers and maps agree with the brute-force oracle") {
  for (std::uint64_t p : {5, 7, 11}) {
    oracle::Fp F{p};
    auto f = Field::prime(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 60; ++i) {
      oracle::Cover k{rng() % p, rng() % p, rng() % p, rng() % p};
      if (i == 0) k = {0, 0, 0, 0};
      auto cover = CoverData::constant(f, k.a, k.b, k.c, k.d);
      auto xs = fiber_X(cover, kPoint);
      auto zs = fiber_Z(cover, kPoint);
      CHECK(as_pairs(xs) == oracle::x_fiber(F, k));
      CHECK(as_pairs(zs) == oracle::z_fiber(F, k));
      auto r = fiber_report(cover, kPoint);
      CHECK(r.laws_hold);
      if (k.fat()) continue;
      for (const auto& x : xs) {
        auto q = psi(cover, kPoint, x);
        auto expected = oracle::psi(F, k, {x.z.residue(), x.w.residue()});
        REQUIRE(q);
        REQUIRE(expected);
        CHECK(as_pairs(std::vector<P1Point>{*q})[0] == *expected);
        CHECK(oracle::lift(F, k, *expected) == oracle::Pt{x.z.residue(), x.w.residue()});
      }
      for (const auto& q : zs) {
        auto g = phi_inverse(cover, kPoint, q);
        CHECK(on_gamma(cover, g));
        CHECK(phi(cover, g).second == q);
      }
      CHECK(fiber_Gamma(cover, kPoint).size() == zs.size());
    }
  }
}

TEST_CASE("line map on split fibers of a family") {
  auto f = Field::prime(7);
  VarList st{"s", "t"};
  auto P = [&](const char* text) { return parse_poly(text, st, f); };
  CoverData cover(P("s^2"), P("s*t"), P("t"), P("s"));
  int split = 0;
  for (const auto& y : enumerate_base(cover, 1000)) {
    if (fiber_X(cover, y).size() != 3) continue;
    ++split;
    for (const auto& check : psi_line_oracle(cover, y)) CHECK(check.match);
  }
  CHECK(split > 0);
}

TEST_CASE("resolution errors") {
  auto f = Field::prime(7);
  auto cover = CoverData::constant(f, 0, 1, 1, 0);
  CHECK_THROWS_AS(phi_inverse(cover, kPoint, P1Point(f.zero(), f.one())), Error);
  CHECK_THROWS_AS(psi(cover, kPoint, AffineFiberPoint{f.zero(), f.zero()}), Error);
  GammaPoint off{{}, {f.zero(), f.zero()}, P1Point(f.one(), f.one())};
  CHECK(!on_gamma(cover, off));
  try {
    phi(cover, off);
    FAIL("phi accepted a point off the resolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnGamma);
  }
  auto rational = CoverData::constant(Field::rationals(), 0, 1, 1, 0);
  CHECK_THROWS_AS(fiber_X(rational, kPoint), Error);
  CHECK_THROWS_AS(enumerate_base(CoverData::universal(f), 100), Error);
  CHECK(enumerate_base(CoverData::universal(f), 10000).size() == 2401);
}

TEST_CASE("maps over Q") {
  auto q = Field::rationals();
  auto cover = CoverData::constant(q, 0, 1, 1, 0);  // roots of u^3 = v^3
  auto one = P1Point(q.one(), q.one());
  CHECK(z_member(cover, kPoint, one));
  auto x = rho_x(cover, kPoint, one);
  CHECK(x == AffineFiberPoint{q.one(), q.one()});
  CHECK(*psi(cover, kPoint, x) == one);
}

TEST_CASE("psi expressions agree modulo the quadrics") {
  for (const auto& e : psi_consensus(CoverData::universal(Field::rationals()))) CHECK(e.is_zero());
}
