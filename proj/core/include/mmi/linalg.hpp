#pragma once

#include <optional>
#include <vector>

#include "mmi/numeric.hpp"

namespace mmi::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Leading principal minors det(A[0..k][0..k]) for k = 0..n-1, computed by
/// fraction-free (Bareiss) elimination without pivoting. Once a minor
/// vanishes the remaining entries are reported as zero.
std::vector<Integer> leading_minors(const IntMatrix& a);

/// Exact solution of A x = b for square A; nullopt when A is singular.
std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b);

/// Rank of a rational matrix (rows are vectors).
std::size_t rank(RatMatrix a);

}  // namespace mmi::linalg
