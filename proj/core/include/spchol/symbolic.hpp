#ifndef SPCHOL_SYMBOLIC_HPP_
#define SPCHOL_SYMBOLIC_HPP_

#include <span>
#include <vector>

#include "spchol/supernodes.hpp"

namespace spchol {

// Floating-point workspace each method needs, in reals.
struct WorkspacePlan {
  Int mf_stack = 0;   // peak of the multifrontal stack, fronts included
  Int ll_update = 0;  // largest scratch U_{K,J} that LL actually forms
  Int rl_update = 0;  // largest square U_J
};

// Supernodal structure of L for a matrix already in factorization order.
// Supernodes are numbered so that parent[J] > J and ascending order is a
// postorder of the supernodal tree.
struct SymbolicFactor {
  Int n = 0;
  SupernodePartition partition;
  std::vector<Int> parent;

  // glbind(J) = rows[row_start[J] .. row_start[J+1]), ascending; the first
  // width(J) entries are J's own columns.
  std::vector<Int> row_start{0};
  std::vector<Int> rows;

  // Sizes of J's blocks (maximal runs of consecutive row indices below J's
  // columns, split where the owning supernode changes), top to bottom.
  std::vector<Int> block_start{0};
  std::vector<Int> block_sizes;

  // Lnz(J) occupies panel_start[J] .. panel_start[J+1) of factor storage:
  // |glbind(J)| x width(J), column-major.
  std::vector<Int> panel_start{0};

  Int factor_nnz = 0;  // lower-trapezoid entries, explicit zeros included
  WorkspacePlan plan;

  Int size() const noexcept { return partition.size(); }
  Int first(Int s) const { return partition.first(s); }
  Int last(Int s) const { return partition.last(s); }
  Int width(Int s) const { return partition.width(s); }

  std::span<const Int> glbind(Int s) const {
    return {rows.data() + row_start[s],
            static_cast<std::size_t>(row_start[s + 1] - row_start[s])};
  }
  Int length(Int s) const { return row_start[s + 1] - row_start[s]; }
  // Rows below the diagonal block.
  std::span<const Int> below(Int s) const { return glbind(s).subspan(width(s)); }
  Int below_count(Int s) const { return length(s) - width(s); }

  std::span<const Int> blocks(Int s) const {
    return {block_sizes.data() + block_start[s],
            static_cast<std::size_t>(block_start[s + 1] - block_start[s])};
  }
  Int block_count() const { return static_cast<Int>(block_sizes.size()); }

  Int panel_storage() const { return panel_start.back(); }

  // Panel position of global row `row` within glbind(s), or kNone.
  Int position(Int s, Int row) const;

  // Children lists in ascending order.
  std::vector<std::vector<Int>> children() const;
};

// Block sizes for one supernode, given its sorted below-diagonal rows.
std::vector<Int> block_partition(std::span<const Int> below_rows,
                                 const SupernodePartition& partition);

// True when the update from a source supernode to target supernode `target`
// can be written straight into Lnz(target): `rows` are the source's rows at
// or beyond first(target), of which the first `in_target` lie in target's
// columns, and they occupy consecutive columns and consecutive panel rows.
bool update_is_dense_in_target(const SymbolicFactor& s, Int target,
                               std::span<const Int> rows, Int in_target);

// Assembles a SymbolicFactor from a partition and each supernode's row list
// (global indices, ascending, own columns first). Computes the supernodal
// tree, blocks, panel offsets, nnz and workspace plans. Throws
// std::invalid_argument when the lists violate the containment property.
SymbolicFactor make_symbolic_factor(SupernodePartition partition,
                                    std::vector<std::vector<Int>> supernode_rows);

// Checks the structural invariants; returns an empty string when valid.
std::string validate(const SymbolicFactor& s);

// Per-supernode stack sizes used by the multifrontal plan.
std::vector<Int> mf_front_sizes(const SymbolicFactor& s);
std::vector<Int> mf_retained_sizes(const SymbolicFactor& s);

}  // namespace spchol

#endif  // SPCHOL_SYMBOLIC_HPP_
