#ifndef SPCHOL_FACTORIZE_HPP_
#define SPCHOL_FACTORIZE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "spchol/analysis.hpp"
#include "spchol/factor_methods.hpp"

namespace spchol {

enum class Method { kReference, kMf, kLl, kRl, kRlb };

inline constexpr Method kAllMethods[] = {Method::kReference, Method::kMf, Method::kLl,
                                         Method::kRl, Method::kRlb};

std::string_view method_name(Method m);
// Accepts ref/reference, mf, ll, rl, rlb; throws std::invalid_argument.
Method parse_method(std::string_view name);

struct RunStats {
  Method method = Method::kRlb;
  std::string backend;
  double seconds = 0.0;  // numerical factorization only
  KernelCounts kernels;
  Int flops = 0;
  Int factor_nnz = 0;
  Int panel_storage = 0;       // reals held by the factor panels
  Int workspace_capacity = 0;  // reals of floating-point scratch allocated
  Int workspace_peak = 0;      // reals actually used
  Int workspace_bytes = 0;
  Int assembly_ops = 0;
  bool mf_stack_clean = true;
  std::map<std::pair<Int, Int>, Int> pair_calls;

  // Factor panels plus floating-point workspace, in reals.
  Int total_storage() const noexcept { return panel_storage + workspace_capacity; }
};

struct FactorResult {
  FactorStorage storage;
  RunStats stats;
};

// Factors a matrix that is already in factor order (see prepare) with the
// given method. The reference method runs the column algorithm on the
// per-column structure and loads its result into the supernodal panels.
// Throws NotPositiveDefiniteError on a missing, zero or negative diagonal
// or a failed pivot.
FactorResult factorize(const SymmetricSparseMatrix& a, const SymbolicFactor& s, Method method,
                       const KernelBackend& backend = reference_backend());

// Fill-reducing order, analysis, and the matrix in factor order.
struct PreparedProblem {
  Analysis analysis;
  Permutation order;  // original column -> factor column
  SymmetricSparseMatrix matrix;
};

PreparedProblem prepare(const SymmetricSparseMatrix& a, const Permutation& fill_order,
                        const AnalysisOptions& options = {});

// Largest |L - L_ref| over the largest |L_ref| (both n x n column-major).
double relative_max_error(std::span<const double> l, std::span<const double> l_ref);

}  // namespace spchol

#endif  // SPCHOL_FACTORIZE_HPP_
