#ifndef SPCHOL_FACTOR_METHODS_HPP_
#define SPCHOL_FACTOR_METHODS_HPP_

#include <vector>

#include "spchol/dense_kernels.hpp"
#include "spchol/factor_storage.hpp"
#include "spchol/relative_index.hpp"
#include "spchol/workspace.hpp"

namespace spchol {

struct KernelCounts {
  Int potrf = 0;
  Int trsm = 0;
  Int syrk = 0;
  Int gemm = 0;
  Int total() const noexcept { return potrf + trsm + syrk + gemm; }
};

struct PairCalls {
  Int source = 0;
  Int target = 0;
  Int calls = 0;
};

struct FactorCounters {
  KernelCounts kernels;
  Int flops = 0;
  // Scatter-add element count (updates added into factor or frontal storage
  // through index maps).
  Int assembly_ops = 0;
  // Kernel calls issued from source supernode J toward target P, for RLB.
  // One entry per pair, appended in factorization order.
  std::vector<PairCalls> pair_calls;
  // MF only: the stack was empty after every root and at termination.
  bool mf_stack_clean = true;
};

// Forwards to the checked kernels and counts calls and flops.
class KernelDispatch {
 public:
  KernelDispatch(const KernelBackend& backend, FactorCounters& counters)
      : backend_(backend), counters_(counters) {}

  const KernelBackend& backend() const noexcept { return backend_; }
  FactorCounters& counters() noexcept { return counters_; }

  // Dense Cholesky of the diagonal block plus the triangular solve below;
  // pivot failures are reported against supernode j and its global column.
  void cdiv(FactorStorage& f, Int j);
  void syrk(PanelView c, ConstPanelView x);
  void gemm(PanelView c, ConstPanelView x, ConstPanelView y);

 private:
  const KernelBackend& backend_;
  FactorCounters& counters_;
};

// Each driver expects `f` to hold A scattered to the factor structure, leaves
// it holding L, and leaves `r` in global mode.
void factor_mf(FactorStorage& f, RelativeIndexMap& r, UpdateWorkspace& w, KernelDispatch& k);
void factor_ll(FactorStorage& f, UpdateWorkspace& w, KernelDispatch& k);
void factor_rl(FactorStorage& f, RelativeIndexMap& r, UpdateWorkspace& w, KernelDispatch& k);
// No floating-point workspace: every update goes straight into Lnz(P).
void factor_rlb(FactorStorage& f, RelativeIndexMap& r, KernelDispatch& k);

}  // namespace spchol

#endif  // SPCHOL_FACTOR_METHODS_HPP_
