#ifndef SPCHOL_ANALYSIS_HPP_
#define SPCHOL_ANALYSIS_HPP_

#include "spchol/merge.hpp"
#include "spchol/partition_refinement.hpp"
#include "spchol/stack_order.hpp"
#include "spchol/symbolic.hpp"

namespace spchol {

struct AnalysisOptions {
  bool merge = true;
  double merge_cap = 12.5;  // percent of the fundamental factor nnz
  bool sibling_order = true;
  bool partition_refinement = true;
};

struct AnalysisStats {
  Int n = 0;
  Int nnz_a = 0;  // lower triangle, diagonal included
  Int fill = 0;   // off-diagonal entries of L absent from A
  Int fundamental_supernodes = 0;
  Int merged_supernodes = 0;
  Int merges = 0;
  Int nnz_fundamental = 0;
  Int nnz_merged = 0;
  Int work_fundamental = 0;  // flops
  Int work_merged = 0;
  Int blocks_before_pr = 0;
  Int blocks_after_pr = 0;
  Int below_rows = 0;  // rows summed over all off-diagonal blocks
  Int pr_kept_supernodes = 0;

  double storage_growth_percent() const;
  double work_growth_percent() const;
  double mean_block_before_pr() const;
  double mean_block_after_pr() const;
};

struct Analysis {
  // Maps columns of the analysed matrix to factor columns (postorder, merge
  // renumbering and partition refinement composed).
  Permutation permutation;
  SymbolicFactor symbolic;
  AnalysisStats stats;
};

// Symbolic analysis of a matrix already in fill-reducing order:
// elimination tree, postorder, column structures, fundamental supernodes,
// merging, stack-minimizing sibling order, renumbering, then (optionally)
// partition refinement.
Analysis build_symbolic_factor(const SymmetricSparsePattern& a,
                               const AnalysisOptions& options = {});

// Factor columns for merged supernodes: groups are laid out in `group_order`
// (a postorder of the merged tree) and the input supernodes inside a group in
// ascending order. Returns new-to-old column labels.
std::vector<Int> merged_column_order(const SupernodePartition& partition,
                                     const MergeResult& merged,
                                     std::span<const Int> group_order);

// Kernel flops of a supernodal factorization with this structure.
Int factor_flops(const SymbolicFactor& s);

}  // namespace spchol

#endif  // SPCHOL_ANALYSIS_HPP_
