#ifndef SPCHOL_MERGE_HPP_
#define SPCHOL_MERGE_HPP_

#include <vector>

#include "spchol/supernodes.hpp"

namespace spchol {

// Result of coalescing child-parent supernode pairs. Merged supernodes are
// described in the labels of the input partition; their columns are in
// general not consecutive until renumbered (see number_supernodes).
struct MergeResult {
  // members[g]: input supernodes forming merged supernode g, ascending.
  std::vector<std::vector<Int>> members;
  // Tree over merged supernodes (kNone for roots). parent[g] > g.
  std::vector<Int> parent;
  // Row structure of each merged supernode (input column labels, ascending);
  // includes the supernode's own columns.
  IndexLists rows;
  // Column count of each merged supernode.
  std::vector<Int> widths;

  Int nnz_before = 0;  // factor nnz of the input partition
  Int nnz_after = 0;   // factor nnz after merging (explicit zeros included)
  Int merges = 0;

  Int size() const noexcept { return static_cast<Int>(members.size()); }
  double growth_percent() const {
    return nnz_before == 0 ? 0.0
                           : 100.0 * static_cast<double>(nnz_after - nnz_before) /
                                 static_cast<double>(nnz_before);
  }
};

// Extra factor nonzeros created by merging a child with `child_rows` rows and
// `child_width` columns into its parent.
Int merge_cost(const std::vector<Int>& child_rows, Int child_width,
               const std::vector<Int>& parent_rows, Int parent_width);

// Greedy amalgamation: repeatedly merges the child-parent pair adding the
// fewest factor nonzeros (ties: smaller first column of the child) until the
// next merge would push cumulative growth above `cap_percent` of the input
// factor nnz. Zero-cost merges are therefore always taken.
MergeResult merge_supernodes(const SupernodePartition& partition,
                             const IndexLists& glbind, double cap_percent);

// Wraps an unmerged partition in a MergeResult (one member per supernode).
MergeResult unmerged(const SupernodePartition& partition, const IndexLists& glbind);

}  // namespace spchol

#endif  // SPCHOL_MERGE_HPP_
