#ifndef SPCHOL_FACTOR_STORAGE_HPP_
#define SPCHOL_FACTOR_STORAGE_HPP_

#include <vector>

#include "spchol/dense_kernels.hpp"
#include "spchol/sparse_matrix.hpp"
#include "spchol/symbolic.hpp"

namespace spchol {

enum class FactorState { kHoldsA, kHoldsL };

// The Lnz(J) panels: one |glbind(J)| x |J| column-major rectangle per
// supernode, stored back to back. Keeps a pointer to the symbolic factor,
// which must outlive it.
class FactorStorage {
 public:
  FactorStorage() = default;
  // All-zero panels, state kHoldsA.
  explicit FactorStorage(const SymbolicFactor& s);

  const SymbolicFactor& symbolic() const { return *s_; }
  FactorState state() const noexcept { return state_; }
  void set_state(FactorState state) noexcept { state_ = state; }

  PanelView panel(Int j) {
    return {values_.data() + s_->panel_start[j], s_->length(j), s_->width(j), s_->length(j)};
  }
  ConstPanelView panel(Int j) const {
    return {values_.data() + s_->panel_start[j], s_->length(j), s_->width(j), s_->length(j)};
  }

  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }

  // Stored value at (row, col) with row >= col, or 0 when (row, col) is not
  // part of the structure.
  double entry(Int row, Int col) const;

  // n x n column-major copy of the lower triangle (upper part zero).
  std::vector<double> to_dense_lower() const;

 private:
  const SymbolicFactor* s_ = nullptr;
  std::vector<double> values_;
  FactorState state_ = FactorState::kHoldsA;
};

// Places every stored entry of A (already in factor order) at its glbind
// position. Throws std::invalid_argument when a row is missing from the
// structure.
FactorStorage scatter_A_into_factor(const SymmetricSparseMatrix& a, const SymbolicFactor& s);

}  // namespace spchol

#endif  // SPCHOL_FACTOR_STORAGE_HPP_
