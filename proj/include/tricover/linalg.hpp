#pragma once

#include <vector>

#include "tricover/field.hpp"

namespace tricover {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank by exact Gaussian elimination. Rows must have equal length.
std::size_t matrix_rank(ScalarMatrix rows);

}  // namespace tricover
