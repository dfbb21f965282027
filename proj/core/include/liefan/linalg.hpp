#pragma once

#include "liefan/rational.hpp"

#include <optional>
#include <vector>

namespace liefan {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

/// Solves A x = b by Gaussian elimination. Throws ConfigError if singular.
RatVector solve_linear(RatMatrix a, RatVector b);

/// Exact inverse of a square matrix. Throws ConfigError if singular.
RatMatrix invert_matrix(const RatMatrix& a);

/// Least-squares-free exact solve of an overdetermined consistent system:
/// finds x with sum_j x_j columns[j] == target, or nullopt if target is not
/// in the column span. Columns must be linearly independent.
std::optional<RatVector> solve_in_span(const std::vector<RatVector>& columns,
                                       const RatVector& target);

} // namespace liefan
