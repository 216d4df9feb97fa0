#include "spchol/sparse_matrix.hpp"

#include <algorithm>
#include <string>

namespace spchol {

SymmetricSparsePattern::SymmetricSparsePattern(Int n, std::vector<Int> colptr,
                                               std::vector<Int> rowind)
    : n_(n), colptr_(std::move(colptr)), rowind_(std::move(rowind)) {
  if (n_ < 0) throw std::invalid_argument("pattern: negative dimension");
  if (static_cast<Int>(colptr_.size()) != n_ + 1 || colptr_.front() != 0 ||
      colptr_.back() != static_cast<Int>(rowind_.size())) {
    throw std::invalid_argument("pattern: colptr inconsistent with rowind");
  }
  for (Int j = 0; j < n_; ++j) {
    const Int begin = colptr_[j];
    const Int end = colptr_[j + 1];
    if (end < begin) {
      throw std::invalid_argument("pattern: colptr decreases at column " +
                                  std::to_string(j + 1));
    }
    if (begin == end || rowind_[begin] != j) {
      throw std::invalid_argument("pattern: column " + std::to_string(j + 1) +
                                  " does not start with its diagonal");
    }
    for (Int p = begin + 1; p < end; ++p) {
      if (rowind_[p] <= rowind_[p - 1] || rowind_[p] >= n_) {
        throw std::invalid_argument(
            "pattern: rows of column " + std::to_string(j + 1) +
            " are not strictly ascending within range");
      }
    }
  }
}

std::vector<std::vector<Int>> SymmetricSparsePattern::row_lists() const {
  std::vector<std::vector<Int>> rows(n_);
  for (Int j = 0; j < n_; ++j) {
    for (Int p = colptr_[j] + 1; p < colptr_[j + 1]; ++p) {
      rows[rowind_[p]].push_back(j);
    }
  }
  return rows;
}

SymmetricSparseMatrix::SymmetricSparseMatrix(SymmetricSparsePattern pattern,
                                             std::vector<double> values,
                                             std::vector<Int> inserted_diagonals)
    : pattern_(std::move(pattern)),
      values_(std::move(values)),
      inserted_diagonals_(std::move(inserted_diagonals)) {
  if (static_cast<Int>(values_.size()) != pattern_.nnz()) {
    throw std::invalid_argument("matrix: values length differs from pattern nnz");
  }
}

std::vector<double> SymmetricSparseMatrix::multiply(
    std::span<const double> x) const {
  const Int n = size();
  if (static_cast<Int>(x.size()) != n) {
    throw std::invalid_argument("multiply: vector length mismatch");
  }
  std::vector<double> y(n, 0.0);
  const auto& cp = pattern_.colptr();
  const auto& ri = pattern_.rowind();
  for (Int j = 0; j < n; ++j) {
    y[j] += values_[cp[j]] * x[j];
    for (Int p = cp[j] + 1; p < cp[j + 1]; ++p) {
      y[ri[p]] += values_[p] * x[j];
      y[j] += values_[p] * x[ri[p]];
    }
  }
  return y;
}

SymmetricSparseMatrix assemble_symmetric(Int n,
                                         std::span<const Triplet> entries) {
  std::vector<Triplet> lower;
  lower.reserve(entries.size() + static_cast<std::size_t>(n));
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw std::invalid_argument("assemble_symmetric: index out of range");
    }
    if (t.row >= t.col) {
      lower.push_back(t);
    } else {
      lower.push_back({t.col, t.row, t.value});
    }
  }
  std::sort(lower.begin(), lower.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });

  std::vector<Int> colptr(n + 1, 0);
  std::vector<Int> rowind;
  std::vector<double> values;
  std::vector<Int> inserted;
  rowind.reserve(lower.size() + static_cast<std::size_t>(n));
  values.reserve(lower.size() + static_cast<std::size_t>(n));

  std::size_t k = 0;
  for (Int j = 0; j < n; ++j) {
    colptr[j] = static_cast<Int>(rowind.size());
    if (k >= lower.size() || lower[k].col != j || lower[k].row != j) {
      rowind.push_back(j);
      values.push_back(0.0);
      inserted.push_back(j);
    }
    for (; k < lower.size() && lower[k].col == j; ++k) {
      if (!rowind.empty() && static_cast<Int>(rowind.size()) > colptr[j] &&
          rowind.back() == lower[k].row) {
        values.back() += lower[k].value;
      } else {
        rowind.push_back(lower[k].row);
        values.push_back(lower[k].value);
      }
    }
  }
  colptr[n] = static_cast<Int>(rowind.size());
  return SymmetricSparseMatrix(
      SymmetricSparsePattern(n, std::move(colptr), std::move(rowind)),
      std::move(values), std::move(inserted));
}

}  // namespace spchol
