#include "spchol/reference_factor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spchol {

double ColumnFactor::entry(Int row, Int col) const {
  const auto begin = rowind.begin() + colptr[col];
  const auto end = rowind.begin() + colptr[col + 1];
  const auto it = std::lower_bound(begin, end, row);
  if (it == end || *it != row) return 0.0;
  return values[static_cast<std::size_t>(it - rowind.begin())];
}

std::vector<double> ColumnFactor::to_dense_lower() const {
  std::vector<double> dense(static_cast<std::size_t>(n * n), 0.0);
  for (Int j = 0; j < n; ++j) {
    for (Int q = colptr[j]; q < colptr[j + 1]; ++q) dense[rowind[q] + j * n] = values[q];
  }
  return dense;
}

ColumnFactor factor_reference(const SymmetricSparseMatrix& a, const IndexLists& glbind) {
  const Int n = a.size();
  if (static_cast<Int>(glbind.size()) != n) {
    throw std::invalid_argument("factor_reference: structure size mismatch");
  }
  ColumnFactor l;
  l.n = n;
  for (Int j = 0; j < n; ++j) {
    l.rowind.insert(l.rowind.end(), glbind[j].begin(), glbind[j].end());
    l.colptr.push_back(static_cast<Int>(l.rowind.size()));
  }
  l.values.assign(l.rowind.size(), 0.0);

  std::vector<double> t(static_cast<std::size_t>(n), 0.0);
  // Columns k waiting to update column j are chained from head[j]; next_pos[k]
  // is the position in column k of its next target row.
  std::vector<Int> head(n, kNone), link(n, kNone), next_pos(n, 0);

  for (Int j = 0; j < n; ++j) {
    const auto arow = a.pattern().column(j);
    const auto avals = a.column_values(j);
    for (std::size_t q = 0; q < arow.size(); ++q) t[arow[q]] = avals[q];

    for (Int k = head[j]; k != kNone;) {
      const Int following = link[k];
      const Int pj = next_pos[k];
      const double ljk = l.values[pj];
      for (Int q = pj; q < l.colptr[k + 1]; ++q) t[l.rowind[q]] -= l.values[q] * ljk;
      l.flops += 2 * (l.colptr[k + 1] - pj);
      next_pos[k] = pj + 1;
      if (pj + 1 < l.colptr[k + 1]) {
        const Int target = l.rowind[pj + 1];
        link[k] = head[target];
        head[target] = k;
      }
      k = following;
    }

    const double pivot = t[j];
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError("non-positive pivot at column " + std::to_string(j + 1),
                                     kNone, j);
    }
    const double d = std::sqrt(pivot);
    for (Int q = l.colptr[j]; q < l.colptr[j + 1]; ++q) {
      const Int row = l.rowind[q];
      l.values[q] = row == j ? d : t[row] / d;
      t[row] = 0.0;
    }
    l.flops += l.colptr[j + 1] - l.colptr[j];

    if (l.colptr[j + 1] - l.colptr[j] > 1) {
      next_pos[j] = l.colptr[j] + 1;
      const Int target = l.rowind[next_pos[j]];
      link[j] = head[target];
      head[target] = j;
    }
  }
  return l;
}

std::vector<double> solve(const ColumnFactor& l, std::span<const double> b) {
  if (static_cast<Int>(b.size()) != l.n) throw std::invalid_argument("solve: size mismatch");
  std::vector<double> x(b.begin(), b.end());
  for (Int j = 0; j < l.n; ++j) {
    x[j] /= l.values[l.colptr[j]];
    for (Int q = l.colptr[j] + 1; q < l.colptr[j + 1]; ++q) x[l.rowind[q]] -= l.values[q] * x[j];
  }
  for (Int j = l.n - 1; j >= 0; --j) {
    for (Int q = l.colptr[j] + 1; q < l.colptr[j + 1]; ++q) x[j] -= l.values[q] * x[l.rowind[q]];
    x[j] /= l.values[l.colptr[j]];
  }
  return x;
}

std::vector<double> to_dense(const SymmetricSparseMatrix& a) {
  const Int n = a.size();
  std::vector<double> dense(static_cast<std::size_t>(n * n), 0.0);
  for (Int j = 0; j < n; ++j) {
    const auto rows = a.pattern().column(j);
    const auto vals = a.column_values(j);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      dense[rows[q] + j * n] = vals[q];
      dense[j + rows[q] * n] = vals[q];
    }
  }
  return dense;
}

std::vector<double> dense_cholesky(const SymmetricSparseMatrix& a) {
  const Int n = a.size();
  std::vector<double> m = to_dense(a);
  for (Int k = 0; k < n; ++k) {
    double pivot = m[k + k * n];
    for (Int p = 0; p < k; ++p) pivot -= m[k + p * n] * m[k + p * n];
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError("dense cholesky: non-positive pivot at column " +
                                         std::to_string(k + 1),
                                     kNone, k);
    }
    const double d = std::sqrt(pivot);
    m[k + k * n] = d;
    for (Int i = k + 1; i < n; ++i) {
      double v = m[i + k * n];
      for (Int p = 0; p < k; ++p) v -= m[i + p * n] * m[k + p * n];
      m[i + k * n] = v / d;
    }
  }
  for (Int j = 0; j < n; ++j) {
    for (Int i = 0; i < j; ++i) m[i + j * n] = 0.0;
  }
  return m;
}

}  // namespace spchol
