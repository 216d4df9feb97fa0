#include "spchol/factorize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "spchol/etree.hpp"
#include "spchol/reference_factor.hpp"

namespace spchol {

void KernelDispatch::cdiv(FactorStorage& f, Int j) {
  const SymbolicFactor& s = f.symbolic();
  const PanelView panel = f.panel(j);
  const Int width = s.width(j);
  const Int below = s.below_count(j);
  try {
    chol_in_place(backend_, panel.block(0, 0, width, width));
  } catch (const NotPositiveDefiniteError& e) {
    const Int column = s.first(j) + e.column();
    throw NotPositiveDefiniteError("matrix is not positive definite: pivot at column " +
                                       std::to_string(column + 1) + " (supernode " +
                                       std::to_string(j + 1) + ")",
                                   j, column);
  }
  ++counters_.kernels.potrf;
  counters_.flops += flops::potrf(width);
  if (below > 0) {
    trsm_right_lt(backend_, panel.block(0, 0, width, width),
                  panel.block(width, 0, below, width));
    ++counters_.kernels.trsm;
    counters_.flops += flops::trsm(below, width);
  }
}

void KernelDispatch::syrk(PanelView c, ConstPanelView x) {
  syrk_lower(backend_, c, x);
  ++counters_.kernels.syrk;
  counters_.flops += flops::syrk(c.rows, x.cols);
}

void KernelDispatch::gemm(PanelView c, ConstPanelView x, ConstPanelView y) {
  gemm_nt(backend_, c, x, y);
  ++counters_.kernels.gemm;
  counters_.flops += flops::gemm(c.rows, c.cols, x.cols);
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kReference: return "ref";
    case Method::kMf: return "mf";
    case Method::kLl: return "ll";
    case Method::kRl: return "rl";
    case Method::kRlb: return "rlb";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "ref" || name == "reference") return Method::kReference;
  if (name == "mf") return Method::kMf;
  if (name == "ll") return Method::kLl;
  if (name == "rl") return Method::kRl;
  if (name == "rlb") return Method::kRlb;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

namespace {

void check_diagonal(const SymmetricSparseMatrix& a) {
  for (Int j = 0; j < a.size(); ++j) {
    const double d = a.column_values(j)[0];
    if (!(d > 0.0)) {
      throw NotPositiveDefiniteError("diagonal entry " + std::to_string(j + 1) +
                                         " is not positive",
                                     kNone, j);
    }
  }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

FactorResult factorize(const SymmetricSparseMatrix& a, const SymbolicFactor& s, Method method,
                       const KernelBackend& backend) {
  check_diagonal(a);
  FactorResult result{scatter_A_into_factor(a, s), {}};
  RunStats& stats = result.stats;
  stats.method = method;
  stats.backend = std::string(backend.name);
  stats.factor_nnz = s.factor_nnz;
  stats.panel_storage = s.panel_storage();

  if (method == Method::kReference) {
    const IndexLists glbind = symbolic_factorization(a.pattern(), elimination_tree(a.pattern()));
    const auto start = Clock::now();
    const ColumnFactor l = factor_reference(a, glbind);
    stats.seconds = seconds_since(start);
    stats.flops = l.flops;
    stats.workspace_capacity = stats.workspace_peak = a.size();
    stats.workspace_bytes = a.size() * static_cast<Int>(sizeof(double));
    for (Int j = 0; j < s.size(); ++j) {
      PanelView p = result.storage.panel(j);
      const auto rows = s.glbind(j);
      for (Int c = 0; c < p.cols; ++c) {
        for (Int r = c; r < p.rows; ++r) p(r, c) = l.entry(rows[r], s.first(j) + c);
      }
    }
    result.storage.set_state(FactorState::kHoldsL);
    return result;
  }

  FactorCounters counters;
  KernelDispatch kernels(backend, counters);
  RelativeIndexMap relind(s);
  Int reals = 0;
  switch (method) {
    case Method::kMf: reals = s.plan.mf_stack; break;
    case Method::kLl: reals = s.plan.ll_update; break;
    case Method::kRl: reals = s.plan.rl_update; break;
    default: break;
  }
  UpdateWorkspace workspace(reals, method == Method::kRlb ? 0 : s.n);

  const auto start = Clock::now();
  switch (method) {
    case Method::kMf: factor_mf(result.storage, relind, workspace, kernels); break;
    case Method::kLl: factor_ll(result.storage, workspace, kernels); break;
    case Method::kRl: factor_rl(result.storage, relind, workspace, kernels); break;
    case Method::kRlb: factor_rlb(result.storage, relind, kernels); break;
    case Method::kReference: break;
  }
  stats.seconds = seconds_since(start);

  stats.kernels = counters.kernels;
  stats.flops = counters.flops;
  stats.assembly_ops = counters.assembly_ops;
  stats.mf_stack_clean = counters.mf_stack_clean;
  for (const PairCalls& pc : counters.pair_calls) {
    stats.pair_calls[{pc.source, pc.target}] += pc.calls;
  }
  stats.workspace_capacity = workspace.capacity();
  stats.workspace_peak = workspace.peak();
  stats.workspace_bytes = workspace.bytes_allocated();
  return result;
}

PreparedProblem prepare(const SymmetricSparseMatrix& a, const Permutation& fill_order,
                        const AnalysisOptions& options) {
  if (fill_order.size() != a.size()) {
    throw std::invalid_argument("ordering has " + std::to_string(fill_order.size()) +
                                " entries for a matrix of order " + std::to_string(a.size()));
  }
  PreparedProblem out;
  const SymmetricSparsePattern ordered = apply_symmetric_permutation(a.pattern(), fill_order);
  out.analysis = build_symbolic_factor(ordered, options);
  out.order = fill_order.then(out.analysis.permutation);
  out.matrix = apply_symmetric_permutation(a, out.order);
  return out;
}

double relative_max_error(std::span<const double> l, std::span<const double> l_ref) {
  if (l.size() != l_ref.size()) throw std::invalid_argument("relative_max_error: size mismatch");
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    diff = std::max(diff, std::abs(l[i] - l_ref[i]));
    scale = std::max(scale, std::abs(l_ref[i]));
  }
  if (std::isnan(diff)) return diff;
  return scale == 0.0 ? diff : diff / scale;
}

}  // namespace spchol
