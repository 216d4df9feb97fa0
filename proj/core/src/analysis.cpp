#include "spchol/analysis.hpp"

#include <algorithm>

#include "spchol/dense_kernels.hpp"
#include "spchol/etree.hpp"

namespace spchol {

namespace {

double percent(Int after, Int before) {
  if (before == 0) return 0.0;
  return 100.0 * static_cast<double>(after - before) / static_cast<double>(before);
}

double ratio(Int num, Int den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double AnalysisStats::storage_growth_percent() const {
  return percent(nnz_merged, nnz_fundamental);
}
double AnalysisStats::work_growth_percent() const {
  return percent(work_merged, work_fundamental);
}
double AnalysisStats::mean_block_before_pr() const { return ratio(below_rows, blocks_before_pr); }
double AnalysisStats::mean_block_after_pr() const { return ratio(below_rows, blocks_after_pr); }

std::vector<Int> merged_column_order(const SupernodePartition& partition,
                                     const MergeResult& merged,
                                     std::span<const Int> group_order) {
  std::vector<Int> new_to_old;
  new_to_old.reserve(partition.columns());
  for (Int g : group_order) {
    for (Int s : merged.members[g]) {
      for (Int col = partition.first(s); col <= partition.last(s); ++col) {
        new_to_old.push_back(col);
      }
    }
  }
  return new_to_old;
}

Int factor_flops(const SymbolicFactor& s) {
  Int total = 0;
  for (Int j = 0; j < s.size(); ++j) total += flops::supernode(s.length(j), s.width(j));
  return total;
}

Analysis build_symbolic_factor(const SymmetricSparsePattern& a,
                               const AnalysisOptions& options) {
  Analysis out;
  AnalysisStats& stats = out.stats;
  stats.n = a.size();
  stats.nnz_a = a.nnz();

  // Postorder the elimination tree so fundamental supernodes are consecutive.
  const Permutation post = elimination_tree(a).postorder_permutation();
  const SymmetricSparsePattern ap = apply_symmetric_permutation(a, post);
  const EliminationTree tree = elimination_tree(ap);
  const IndexLists glbind = symbolic_factorization(ap, tree);
  stats.fill = count_fill(ap, glbind);

  const SupernodePartition fundamental = fundamental_supernodes(tree, glbind);
  stats.fundamental_supernodes = fundamental.size();
  for (Int s = 0; s < fundamental.size(); ++s) {
    const Int len = static_cast<Int>(glbind[fundamental.first(s)].size());
    stats.work_fundamental += flops::supernode(len, fundamental.width(s));
  }

  const MergeResult merged = options.merge
                                 ? merge_supernodes(fundamental, glbind, options.merge_cap)
                                 : unmerged(fundamental, glbind);
  stats.merged_supernodes = merged.size();
  stats.merges = merged.merges;
  stats.nnz_fundamental = merged.nnz_before;
  stats.nnz_merged = merged.nnz_after;

  // Stack sizes of the merged tree, for the sibling order.
  const Int groups = merged.size();
  std::vector<Int> group_of(a.size());
  for (Int g = 0; g < groups; ++g) {
    for (Int s : merged.members[g]) {
      for (Int col = fundamental.first(s); col <= fundamental.last(s); ++col) {
        group_of[col] = g;
      }
    }
  }
  std::vector<Int> front(groups), retained(groups, 0);
  for (Int g = 0; g < groups; ++g) {
    const Int below = static_cast<Int>(merged.rows[g].size()) - merged.widths[g];
    front[g] = below * below;
    if (merged.parent[g] == kNone) continue;
    Int beyond = 0;
    for (Int row : merged.rows[g]) {
      const Int owner = group_of[row];
      if (owner != g && owner != merged.parent[g]) ++beyond;
    }
    retained[g] = beyond * (beyond + 1) / 2;
  }
  for (Int g = 0; g < groups; ++g) {
    stats.work_merged +=
        flops::supernode(static_cast<Int>(merged.rows[g].size()), merged.widths[g]);
  }
  const StackPlan plan =
      liu_sibling_order(merged.parent, front, retained, options.sibling_order);

  // Renumber so each merged supernode occupies consecutive columns.
  const Permutation renumber = Permutation::from_new_to_old(
      merged_column_order(fundamental, merged, plan.postorder));
  std::vector<Int> starts{0};
  std::vector<std::vector<Int>> rows;
  rows.reserve(groups);
  for (Int g : plan.postorder) {
    starts.push_back(starts.back() + merged.widths[g]);
    std::vector<Int> list;
    list.reserve(merged.rows[g].size());
    for (Int row : merged.rows[g]) list.push_back(renumber.new_index(row));
    std::sort(list.begin(), list.end());
    rows.push_back(std::move(list));
  }
  SymbolicFactor symbolic =
      make_symbolic_factor(SupernodePartition(std::move(starts)), std::move(rows));
  out.permutation = post.then(renumber);

  for (Int j = 0; j < symbolic.size(); ++j) stats.below_rows += symbolic.below_count(j);
  stats.blocks_before_pr = symbolic.block_count();
  if (options.partition_refinement) {
    ReorderResult pr = reorder_within_supernodes(symbolic);
    stats.pr_kept_supernodes = pr.kept_supernodes;
    out.permutation = out.permutation.then(pr.permutation);
    symbolic = std::move(pr.symbolic);
  }
  stats.blocks_after_pr = symbolic.block_count();
  out.symbolic = std::move(symbolic);
  return out;
}

}  // namespace spchol
