#include "spchol/dense_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spchol {

namespace {

constexpr Int kBlock = 64;

void check_view(const char* kernel, Int rows, Int cols, Int ld) {
  if (rows < 0 || cols < 0 || (rows > 0 && cols > 0 && ld < rows)) {
    throw std::invalid_argument(std::string(kernel) + ": bad view shape");
  }
}

void ref_trsm(ConstPanelView t, PanelView b) {
  const Int m = b.rows;
  const Int c = b.cols;
  for (Int k = 0; k < c; ++k) {
    double* bk = &b(0, k);
    const double inv = 1.0 / t(k, k);
    for (Int i = 0; i < m; ++i) bk[i] *= inv;
    for (Int j = k + 1; j < c; ++j) {
      const double tjk = t(j, k);
      if (tjk == 0.0) continue;
      double* bj = &b(0, j);
      for (Int i = 0; i < m; ++i) bj[i] -= bk[i] * tjk;
    }
  }
}

void ref_syrk(PanelView c, ConstPanelView x) {
  const Int n = c.rows;
  const Int k = x.cols;
  for (Int j = 0; j < n; ++j) {
    double* cj = &c(0, j);
    for (Int l = 0; l < k; ++l) {
      const double xjl = x(j, l);
      if (xjl == 0.0) continue;
      const double* xl = &x(0, l);
      for (Int i = j; i < n; ++i) cj[i] -= xl[i] * xjl;
    }
  }
}

void ref_gemm(PanelView c, ConstPanelView x, ConstPanelView y) {
  const Int m = c.rows;
  const Int n = c.cols;
  const Int k = x.cols;
  for (Int j = 0; j < n; ++j) {
    double* cj = &c(0, j);
    for (Int l = 0; l < k; ++l) {
      const double yjl = y(j, l);
      if (yjl == 0.0) continue;
      const double* xl = &x(0, l);
      for (Int i = 0; i < m; ++i) cj[i] -= xl[i] * yjl;
    }
  }
}

void unblocked_potrf(PanelView a, Int offset) {
  const Int n = a.rows;
  for (Int k = 0; k < n; ++k) {
    const double pivot = a(k, k);
    if (!(pivot > 0.0)) {
      throw NotPositiveDefiniteError(
          "non-positive pivot at local column " + std::to_string(offset + k + 1),
          kNone, offset + k);
    }
    const double d = std::sqrt(pivot);
    a(k, k) = d;
    double* ak = &a(0, k);
    for (Int i = k + 1; i < n; ++i) ak[i] /= d;
    for (Int j = k + 1; j < n; ++j) {
      const double ajk = ak[j];
      if (ajk == 0.0) continue;
      double* aj = &a(0, j);
      for (Int i = j; i < n; ++i) aj[i] -= ak[i] * ajk;
    }
  }
}

void ref_potrf(PanelView a) {
  const Int n = a.rows;
  if (n <= kBlock) {
    unblocked_potrf(a, 0);
    return;
  }
  for (Int k = 0; k < n; k += kBlock) {
    const Int nb = std::min(kBlock, n - k);
    PanelView diag = a.block(k, k, nb, nb);
    unblocked_potrf(diag, k);
    const Int rest = n - k - nb;
    if (rest == 0) break;
    PanelView below = a.block(k + nb, k, rest, nb);
    ref_trsm(diag, below);
    ref_syrk(a.block(k + nb, k + nb, rest, rest), below);
  }
}

const KernelBackend kReference{"reference", ref_potrf, ref_trsm, ref_syrk, ref_gemm};

}  // namespace

const KernelBackend& reference_backend() { return kReference; }

#ifndef SPCHOL_HAVE_OPENBLAS
const KernelBackend* vendor_backend() { return nullptr; }
#endif

const KernelBackend& backend_by_name(std::string_view name) {
  if (name == "reference") return reference_backend();
  if (name == "vendor") {
    if (const KernelBackend* v = vendor_backend()) return *v;
    throw std::invalid_argument("vendor backend not available (not built, or failed its self-check)");
  }
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

void chol_in_place(const KernelBackend& backend, PanelView a) {
  check_view("potrf", a.rows, a.cols, a.ld);
  if (a.rows != a.cols) throw std::invalid_argument("potrf: matrix not square");
  if (a.rows == 0) return;
  backend.potrf(a);
}

void trsm_right_lt(const KernelBackend& backend, ConstPanelView t, PanelView b) {
  check_view("trsm", t.rows, t.cols, t.ld);
  check_view("trsm", b.rows, b.cols, b.ld);
  if (t.rows != t.cols || b.cols != t.rows) {
    throw std::invalid_argument("trsm: shape mismatch");
  }
  for (Int k = 0; k < t.rows; ++k) {
    if (t(k, k) == 0.0) {
      throw std::domain_error("trsm: zero diagonal at " + std::to_string(k + 1));
    }
  }
  if (b.rows == 0 || b.cols == 0) return;
  backend.trsm_right_lt(t, b);
}

void syrk_lower(const KernelBackend& backend, PanelView c, ConstPanelView x) {
  check_view("syrk", c.rows, c.cols, c.ld);
  check_view("syrk", x.rows, x.cols, x.ld);
  if (c.rows != c.cols || x.rows != c.rows) {
    throw std::invalid_argument("syrk: shape mismatch");
  }
  if (c.rows == 0 || x.cols == 0) return;
  backend.syrk_lower(c, x);
}

void gemm_nt(const KernelBackend& backend, PanelView c, ConstPanelView x,
             ConstPanelView y) {
  check_view("gemm", c.rows, c.cols, c.ld);
  check_view("gemm", x.rows, x.cols, x.ld);
  check_view("gemm", y.rows, y.cols, y.ld);
  if (x.cols != y.cols || c.rows != x.rows || c.cols != y.rows) {
    throw std::invalid_argument("gemm: shape mismatch");
  }
  if (c.rows == 0 || c.cols == 0 || x.cols == 0) return;
  backend.gemm_nt(c, x, y);
}

namespace flops {

Int potrf(Int n) {
  Int total = 0;
  for (Int k = 0; k < n; ++k) {
    const Int rest = n - k - 1;
    total += 1 + rest + rest * (rest + 1);
  }
  return total;
}

Int trsm(Int m, Int n) { return m * n * n; }
Int syrk(Int n, Int k) { return n * (n + 1) * k; }
Int gemm(Int m, Int n, Int k) { return 2 * m * n * k; }

Int supernode(Int length, Int width) {
  const Int below = length - width;
  return potrf(width) + trsm(below, width) + syrk(below, width);
}

}  // namespace flops

}  // namespace spchol
