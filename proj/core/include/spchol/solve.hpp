#ifndef SPCHOL_SOLVE_HPP_
#define SPCHOL_SOLVE_HPP_

#include <span>
#include <vector>

#include "spchol/factor_storage.hpp"

namespace spchol {

// Solves L L^T x = b in factor order with supernodal forward and backward
// substitution. Throws std::logic_error unless the storage holds L.
std::vector<double> solve(const FactorStorage& f, std::span<const double> b);

// ||A x - b||_2 / ||b||_2.
double relative_residual(const SymmetricSparseMatrix& a, std::span<const double> x,
                         std::span<const double> b);

}  // namespace spchol

#endif  // SPCHOL_SOLVE_HPP_
