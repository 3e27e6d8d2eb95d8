#include "mmi/linalg.hpp"

#include <utility>

namespace mmi::linalg {

std::vector<Integer> leading_minors(const IntMatrix& input) {
  const std::size_t n = input.size();
  IntMatrix a = input;
  std::vector<Integer> minors(n, Integer(0));
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) return minors;
    minors[k] = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: exact division by the previous pivot.
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return minors;
}

std::optional<std::vector<Rational>> solve(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::size_t rank(RatMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace mmi::linalg
