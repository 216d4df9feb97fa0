#ifndef SPCHOL_SPARSE_MATRIX_HPP_
#define SPCHOL_SPARSE_MATRIX_HPP_

#include <span>
#include <vector>

#include "spchol/types.hpp"

namespace spchol {

// Lower-triangle compressed-column structure of a symmetric matrix. Each
// column lists its row indices in strictly ascending order and starts with
// the diagonal.
class SymmetricSparsePattern {
 public:
  SymmetricSparsePattern() = default;

  // Validates the invariants above; throws std::invalid_argument otherwise.
  SymmetricSparsePattern(Int n, std::vector<Int> colptr,
                         std::vector<Int> rowind);

  Int size() const noexcept { return n_; }
  Int nnz() const noexcept { return static_cast<Int>(rowind_.size()); }

  std::span<const Int> column(Int j) const {
    return {rowind_.data() + colptr_[j],
            static_cast<std::size_t>(colptr_[j + 1] - colptr_[j])};
  }

  const std::vector<Int>& colptr() const noexcept { return colptr_; }
  const std::vector<Int>& rowind() const noexcept { return rowind_; }

  // Strictly-lower entries of row i (columns j < i with (i, j) stored), in
  // ascending column order. Built on demand; O(nnz).
  std::vector<std::vector<Int>> row_lists() const;

  friend bool operator==(const SymmetricSparsePattern&,
                         const SymmetricSparsePattern&) = default;

 private:
  Int n_ = 0;
  std::vector<Int> colptr_{0};
  std::vector<Int> rowind_;
};

// Values aligned with a SymmetricSparsePattern. Diagonal positivity is not
// checked here; factorization rejects non-positive pivots.
class SymmetricSparseMatrix {
 public:
  SymmetricSparseMatrix() = default;
  SymmetricSparseMatrix(SymmetricSparsePattern pattern,
                        std::vector<double> values,
                        std::vector<Int> inserted_diagonals = {});

  const SymmetricSparsePattern& pattern() const noexcept { return pattern_; }
  Int size() const noexcept { return pattern_.size(); }
  Int nnz() const noexcept { return pattern_.nnz(); }

  const std::vector<double>& values() const noexcept { return values_; }

  std::span<const double> column_values(Int j) const {
    const auto& cp = pattern_.colptr();
    return {values_.data() + cp[j], static_cast<std::size_t>(cp[j + 1] - cp[j])};
  }

  // Columns whose diagonal was absent from the input and inserted as 0.
  const std::vector<Int>& inserted_diagonals() const noexcept {
    return inserted_diagonals_;
  }

  // y = A x using both triangles.
  std::vector<double> multiply(std::span<const double> x) const;

  friend bool operator==(const SymmetricSparseMatrix&,
                         const SymmetricSparseMatrix&) = default;

 private:
  SymmetricSparsePattern pattern_;
  std::vector<double> values_;
  std::vector<Int> inserted_diagonals_;
};

struct Triplet {
  Int row;
  Int col;
  double value;
};

// Assembles a symmetric matrix from 0-based coordinate entries. Entries in
// the upper triangle are mirrored, duplicates summed, and missing diagonals
// inserted with value 0 (and reported by inserted_diagonals()).
SymmetricSparseMatrix assemble_symmetric(Int n, std::span<const Triplet> entries);

}  // namespace spchol

#endif  // SPCHOL_SPARSE_MATRIX_HPP_
