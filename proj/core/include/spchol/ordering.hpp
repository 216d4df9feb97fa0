#ifndef SPCHOL_ORDERING_HPP_
#define SPCHOL_ORDERING_HPP_

#include "spchol/permutation.hpp"

namespace spchol {

// Greedy minimum-degree ordering on the explicit elimination graph: each
// step eliminates the uneliminated vertex with the fewest uneliminated
// neighbours (smallest original index on ties) and turns its neighbourhood
// into a clique. Quadratic in the worst case; meant for desk-scale inputs.
Permutation minimum_degree_order(const SymmetricSparsePattern& a);

}  // namespace spchol

#endif  // SPCHOL_ORDERING_HPP_
