#ifndef SPCHOL_DENSE_KERNELS_HPP_
#define SPCHOL_DENSE_KERNELS_HPP_

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "spchol/types.hpp"

namespace spchol {

// Column-major view of a rows x cols sub-block with leading dimension ld.
template <typename T>
struct BasicPanelView {
  T* data = nullptr;
  Int rows = 0;
  Int cols = 0;
  Int ld = 0;

  T& operator()(Int i, Int j) const { return data[i + j * ld]; }

  BasicPanelView block(Int row, Int col, Int nrows, Int ncols) const {
    return {data + row + col * ld, nrows, ncols, ld};
  }

  operator BasicPanelView<const std::remove_const_t<T>>() const {
    return {data, rows, cols, ld};
  }
};

using PanelView = BasicPanelView<double>;
using ConstPanelView = BasicPanelView<const double>;

// The four dense kernels the factorizations call. All updates subtract.
//   potrf: lower triangle of A <- its Cholesky factor; strict upper untouched.
//          Throws NotPositiveDefiniteError (supernode kNone, local column).
//   trsm:  B <- B * T^{-T} for lower-triangular T.
//   syrk:  lower triangle of C <- C - X X^T; strict upper untouched.
//   gemm:  C <- C - X Y^T.
struct KernelBackend {
  std::string_view name;
  void (*potrf)(PanelView a);
  void (*trsm_right_lt)(ConstPanelView t, PanelView b);
  void (*syrk_lower)(PanelView c, ConstPanelView x);
  void (*gemm_nt)(PanelView c, ConstPanelView x, ConstPanelView y);
};

const KernelBackend& reference_backend();

// The BLAS/LAPACK-backed backend, or nullptr when the library was built
// without one. Its thread count follows SPCHOL_NUM_THREADS when set.
const KernelBackend* vendor_backend();

// "reference" or "vendor"; throws std::invalid_argument otherwise or when the
// vendor backend is unavailable.
const KernelBackend& backend_by_name(std::string_view name);

// Checked entry points: validate shapes (std::invalid_argument) and forward
// to `backend`.
void chol_in_place(const KernelBackend& backend, PanelView a);
void trsm_right_lt(const KernelBackend& backend, ConstPanelView t, PanelView b);
void syrk_lower(const KernelBackend& backend, PanelView c, ConstPanelView x);
void gemm_nt(const KernelBackend& backend, PanelView c, ConstPanelView x,
             ConstPanelView y);

// Flop conventions: a multiply-add is 2 flops, a square root or a division 1.
namespace flops {
Int potrf(Int n);
Int trsm(Int m, Int n);
Int syrk(Int n, Int k);
Int gemm(Int m, Int n, Int k);
// Completing and fully updating one supernode of the given shape.
Int supernode(Int length, Int width);
}  // namespace flops

}  // namespace spchol

#endif  // SPCHOL_DENSE_KERNELS_HPP_
