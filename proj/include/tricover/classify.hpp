#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tricover/cover.hpp"

namespace tricover {

enum class RamificationClass {
  Unramified,         // roots (1,1,1)
  SimpleDouble,       // roots (2,1)
  CurvilinearTriple,  // roots (3), form not identically zero
  FatTriple,          // form identically zero
};

std::string_view to_string(RamificationClass cls);

/// Multiplicities of the roots of a nonzero binary cubic over the algebraic
/// closure, largest first: {1,1,1}, {2,1} or {3}. Uses gcd(f, f') of the
/// dehomogenization plus the degree deficit for the root [0:1], so roots in
/// extension fields are counted without being found.
std::vector<int> root_pattern(const ScalarCubic& form);

RamificationClass classify_cubic(const ScalarCubic& form);
RamificationClass classify_fiber(const CoverData& cover, std::span<const Scalar> y);

/// Discriminant of p u^3 + q u^2 v + r u v^2 + s v^3:
/// 18pqrs - 4q^3 s + q^2 r^2 - 4p r^3 - 27p^2 s^2.
Scalar discriminant(const ScalarCubic& form);

/// Discriminant of the cover's cubic (b, -3a, 3d, -c) as a base polynomial.
MultiPoly branch_discriminant(const CoverData& cover);

}  // namespace tricover
