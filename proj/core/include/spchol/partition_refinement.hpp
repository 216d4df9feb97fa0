#ifndef SPCHOL_PARTITION_REFINEMENT_HPP_
#define SPCHOL_PARTITION_REFINEMENT_HPP_

#include <span>
#include <vector>

#include "spchol/permutation.hpp"
#include "spchol/symbolic.hpp"

namespace spchol {

// An ordered sequence of disjoint, nonempty cells covering a ground set.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  // One cell holding `ground` in the given order.
  explicit OrderedPartition(std::vector<Int> ground);
  // Throws std::invalid_argument on empty or overlapping cells.
  static OrderedPartition from_cells(std::vector<std::vector<Int>> cells);

  const std::vector<std::vector<Int>>& cells() const noexcept { return cells_; }
  Int ground_size() const noexcept { return ground_size_; }
  // Elements cell by cell.
  std::vector<Int> order() const;

  // Splits every cell C meeting `pivot` into C ∩ pivot and C \ pivot (both
  // keep their relative order). The intersection goes to the front of the
  // pair, except in the leftmost touched cell when the pivot touches several
  // cells: there it goes to the back, next to the other touched cells.
  // Throws std::invalid_argument if the pivot leaves the ground set.
  void refine(std::span<const Int> pivot);

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<std::vector<Int>> cells_;
  Int ground_size_ = 0;
};

OrderedPartition refine(OrderedPartition partition, std::span<const Int> pivot);

struct ReorderResult {
  // Symmetric permutation mapping each column to a column of the same
  // supernode.
  Permutation permutation;
  SymbolicFactor symbolic;
  Int blocks_before = 0;
  Int blocks_after = 0;
  // Supernodes whose refined order would have produced more blocks than
  // their incoming order and were therefore left untouched.
  Int kept_supernodes = 0;
};

// Within-supernode reordering by partition refinement. For each supernode P
// the columns start as one cell and are refined by glbind(K) ∩ P for every
// supernode K that updates P, largest sets first (ties by ascending K).
// Factor nnz, supernode boundaries and parents are unchanged.
ReorderResult reorder_within_supernodes(const SymbolicFactor& s);

// Number of maximal runs of consecutive values in an ascending list.
Int count_runs(std::span<const Int> sorted_values);

}  // namespace spchol

#endif  // SPCHOL_PARTITION_REFINEMENT_HPP_
