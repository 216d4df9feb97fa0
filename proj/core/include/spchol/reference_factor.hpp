#ifndef SPCHOL_REFERENCE_FACTOR_HPP_
#define SPCHOL_REFERENCE_FACTOR_HPP_

#include <span>
#include <vector>

#include "spchol/etree.hpp"
#include "spchol/sparse_matrix.hpp"

namespace spchol {

// L stored by columns with the row structure of each column.
struct ColumnFactor {
  Int n = 0;
  std::vector<Int> colptr{0};
  std::vector<Int> rowind;
  std::vector<double> values;
  Int flops = 0;

  double entry(Int row, Int col) const;
  std::vector<double> to_dense_lower() const;
};

// Left-looking column Cholesky: column j is scattered into a dense vector
// t(0:n), receives cmod updates from every k < j with j in glbind(k), is
// gathered back and completed by cdiv(j). Throws NotPositiveDefiniteError
// (supernode kNone, global column) on a non-positive pivot.
ColumnFactor factor_reference(const SymmetricSparseMatrix& a, const IndexLists& glbind);

// Solves L L^T x = b.
std::vector<double> solve(const ColumnFactor& l, std::span<const double> b);

// Dense Cholesky of the full symmetric matrix: the n x n column-major lower
// factor. Throws NotPositiveDefiniteError on failure.
std::vector<double> dense_cholesky(const SymmetricSparseMatrix& a);

// Dense symmetric copy (both triangles), column-major.
std::vector<double> to_dense(const SymmetricSparseMatrix& a);

}  // namespace spchol

#endif  // SPCHOL_REFERENCE_FACTOR_HPP_
