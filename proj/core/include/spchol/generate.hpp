#ifndef SPCHOL_GENERATE_HPP_
#define SPCHOL_GENERATE_HPP_

#include <cstdint>

#include "spchol/sparse_matrix.hpp"

namespace spchol {

// Random symmetric matrix with each strictly-lower entry present with
// probability `density` (values uniform in [-1, 1]) and diagonal equal to
// 1 + the absolute row sum of its off-diagonals, so the result is SPD.
// Deterministic for a fixed seed. Requires n >= 1 and 0 < density <= 1.
SymmetricSparseMatrix generate_spd(Int n, double density, std::uint64_t seed);

// 5-point Laplacian on a rows x cols grid (Dirichlet boundary), natural
// row-major numbering.
SymmetricSparseMatrix grid_laplacian_2d(Int rows, Int cols);

}  // namespace spchol

#endif  // SPCHOL_GENERATE_HPP_
