#pragma once

#include <vector>

#include "anvm/scalar.hpp"

namespace anvm {

using Matrix = std::vector<std::vector<Scalar>>;

/// Π_{i<j} (x_j − x_i), or Π_{i<j} (x_i − x_j) when negated.
/// Empty and singleton lists give 1.
Scalar vandermonde(const std::vector<Scalar>& xs, bool negated = false);

/// Exact determinant via fraction-free (Bareiss) elimination when all
/// entries are rational; LU with partial pivoting at the minimum operand
/// precision otherwise. Throws std::invalid_argument on non-square input.
Scalar det(const Matrix& m);

}  // namespace anvm
