#include "spchol/generate.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace spchol {

SymmetricSparseMatrix generate_spd(Int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_spd: n must be >= 1");
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generate_spd: density must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  // Draw raw bits and map them ourselves so the output does not depend on
  // the standard library's distribution implementations.
  auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<Triplet> entries;
  std::vector<double> row_sum(n, 0.0);
  for (Int j = 0; j < n; ++j) {
    for (Int i = j + 1; i < n; ++i) {
      if (uniform01() < density) {
        const double value = 2.0 * uniform01() - 1.0;
        entries.push_back({i, j, value});
        row_sum[i] += std::abs(value);
        row_sum[j] += std::abs(value);
      }
    }
  }
  for (Int j = 0; j < n; ++j) entries.push_back({j, j, 1.0 + row_sum[j]});
  return assemble_symmetric(n, entries);
}

SymmetricSparseMatrix grid_laplacian_2d(Int rows, Int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid_laplacian_2d: empty grid");
  }
  std::vector<Triplet> entries;
  auto id = [cols](Int r, Int c) { return r * cols + c; };
  for (Int r = 0; r < rows; ++r) {
    for (Int c = 0; c < cols; ++c) {
      entries.push_back({id(r, c), id(r, c), 4.0});
      if (c + 1 < cols) entries.push_back({id(r, c + 1), id(r, c), -1.0});
      if (r + 1 < rows) entries.push_back({id(r + 1, c), id(r, c), -1.0});
    }
  }
  return assemble_symmetric(rows * cols, entries);
}

}  // namespace spchol
