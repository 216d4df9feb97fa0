#include "spchol/factor_storage.hpp"

#include <string>

namespace spchol {

FactorStorage::FactorStorage(const SymbolicFactor& s)
    : s_(&s), values_(static_cast<std::size_t>(s.panel_storage()), 0.0) {}

double FactorStorage::entry(Int row, Int col) const {
  const Int j = s_->partition.supernode_of(col);
  const Int pos = s_->position(j, row);
  if (pos == kNone || row < col) return 0.0;
  return panel(j)(pos, col - s_->first(j));
}

std::vector<double> FactorStorage::to_dense_lower() const {
  const Int n = s_->n;
  std::vector<double> dense(static_cast<std::size_t>(n * n), 0.0);
  for (Int j = 0; j < s_->size(); ++j) {
    const auto rows = s_->glbind(j);
    const ConstPanelView p = panel(j);
    for (Int c = 0; c < p.cols; ++c) {
      const Int col = s_->first(j) + c;
      for (Int r = c; r < p.rows; ++r) dense[rows[r] + col * n] = p(r, c);
    }
  }
  return dense;
}

FactorStorage scatter_A_into_factor(const SymmetricSparseMatrix& a, const SymbolicFactor& s) {
  if (a.size() != s.n) throw std::invalid_argument("scatter: dimension mismatch");
  FactorStorage f(s);
  for (Int col = 0; col < a.size(); ++col) {
    const Int j = s.partition.supernode_of(col);
    PanelView p = f.panel(j);
    const auto rows = s.glbind(j);
    const auto arow = a.pattern().column(col);
    const auto avals = a.column_values(col);
    // Both lists ascend; walk them together.
    std::size_t pos = 0;
    for (std::size_t k = 0; k < arow.size(); ++k) {
      while (pos < rows.size() && rows[pos] < arow[k]) ++pos;
      if (pos == rows.size() || rows[pos] != arow[k]) {
        throw std::invalid_argument("scatter: entry (" + std::to_string(arow[k] + 1) + ", " +
                                    std::to_string(col + 1) +
                                    ") lies outside the factor structure");
      }
      p(static_cast<Int>(pos), col - s.first(j)) = avals[k];
    }
  }
  return f;
}

}  // namespace spchol
