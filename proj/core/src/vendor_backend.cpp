#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spchol/dense_kernels.hpp"

extern "C" void dpotrf_(const char* uplo, const int* n, double* a, const int* lda,
                        int* info);

namespace spchol {

namespace {

int to_int(Int v) { return static_cast<int>(v); }

void vendor_potrf(PanelView a) {
  const int n = to_int(a.rows);
  const int lda = to_int(a.ld);
  int info = 0;
  dpotrf_("L", &n, a.data, &lda, &info);
  if (info > 0) {
    throw NotPositiveDefiniteError(
        "non-positive pivot at local column " + std::to_string(info), kNone, info - 1);
  }
  if (info < 0) throw std::invalid_argument("dpotrf: bad argument " + std::to_string(-info));
}

void vendor_trsm(ConstPanelView t, PanelView b) {
  cblas_dtrsm(CblasColMajor, CblasRight, CblasLower, CblasTrans, CblasNonUnit,
              to_int(b.rows), to_int(b.cols), 1.0, t.data, to_int(t.ld), b.data,
              to_int(b.ld));
}

void vendor_syrk(PanelView c, ConstPanelView x) {
  cblas_dsyrk(CblasColMajor, CblasLower, CblasNoTrans, to_int(c.rows), to_int(x.cols),
              -1.0, x.data, to_int(x.ld), 1.0, c.data, to_int(c.ld));
}

void vendor_gemm(PanelView c, ConstPanelView x, ConstPanelView y) {
  cblas_dgemm(CblasColMajor, CblasNoTrans, CblasTrans, to_int(c.rows), to_int(c.cols),
              to_int(x.cols), -1.0, x.data, to_int(x.ld), y.data, to_int(y.ld), 1.0,
              c.data, to_int(c.ld));
}

const KernelBackend kVendor{"vendor", vendor_potrf, vendor_trsm, vendor_syrk, vendor_gemm};

// Some OpenBLAS builds pick kernels that miscompute on the running CPU.
// Compare against the reference kernels on a matrix big enough to leave the
// small-size code paths before trusting the library.
bool passes_self_check() {
  const Int n = 200;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n * n);
  for (double& v : x) v = u(rng);
  const ConstPanelView xv{x.data(), n, n, n};
  std::vector<double> g(n * n, 0.0), r(n * n, 0.0);
  vendor_gemm(PanelView{g.data(), n, n, n}, xv, xv);
  reference_backend().gemm_nt(PanelView{r.data(), n, n, n}, xv, xv);
  for (Int k = 0; k < n * n; ++k) {
    if (!(std::abs(g[k] - r[k]) <= 1e-10 * n)) return false;
  }
  // r = -X X^T, so n I - r is SPD.
  std::vector<double> a(n * n);
  for (Int k = 0; k < n * n; ++k) a[k] = -r[k];
  for (Int i = 0; i < n; ++i) a[i + i * n] += static_cast<double>(n);
  std::vector<double> l1 = a, l2 = a;
  try {
    reference_backend().potrf(PanelView{l1.data(), n, n, n});
    vendor_potrf(PanelView{l2.data(), n, n, n});
  } catch (const std::exception&) {
    return false;
  }
  for (Int j = 0; j < n; ++j) {
    for (Int i = j; i < n; ++i) {
      if (!(std::abs(l1[i + j * n] - l2[i + j * n]) <= 1e-10 * n)) return false;
    }
  }
  return true;
}

}  // namespace

const KernelBackend* vendor_backend() {
  static const bool usable = [] {
    if (const char* env = std::getenv("SPCHOL_NUM_THREADS")) {
      const int threads = std::atoi(env);
      if (threads > 0) openblas_set_num_threads(threads);
    }
    if (passes_self_check()) return true;
    std::fprintf(stderr,
                 "spchol: OpenBLAS (%s) failed its self-check on this CPU; vendor backend "
                 "disabled (try OPENBLAS_CORETYPE=Haswell)\n",
                 openblas_get_corename());
    return false;
  }();
  return usable ? &kVendor : nullptr;
}

}  // namespace spchol
