#ifndef SPCHOL_SUPERNODES_HPP_
#define SPCHOL_SUPERNODES_HPP_

#include <vector>

#include "spchol/etree.hpp"

namespace spchol {

// Consecutive-column intervals covering {0..n-1}. Supernode J spans columns
// first(J) .. last(J) inclusive.
class SupernodePartition {
 public:
  SupernodePartition() = default;
  // `starts` holds the first column of each supernode followed by n.
  explicit SupernodePartition(std::vector<Int> starts);

  static SupernodePartition singletons(Int n);

  Int size() const noexcept { return static_cast<Int>(starts_.size()) - 1; }
  Int columns() const noexcept { return starts_.back(); }
  Int first(Int s) const { return starts_[s]; }
  Int last(Int s) const { return starts_[s + 1] - 1; }
  Int width(Int s) const { return starts_[s + 1] - starts_[s]; }
  Int supernode_of(Int column) const { return member_[column]; }
  const std::vector<Int>& starts() const noexcept { return starts_; }

  friend bool operator==(const SupernodePartition&, const SupernodePartition&) = default;

 private:
  std::vector<Int> starts_{0};
  std::vector<Int> member_;
};

// Largest partition in which column j joins j + 1 exactly when
// parent(j) = j + 1, j is the only child of j + 1, and
// glbind(j) \ {j} = glbind(j + 1).
SupernodePartition fundamental_supernodes(const EliminationTree& tree,
                                          const IndexLists& glbind);

// Supernodal parent: the supernode holding min(glbind(J) beyond last(J)), or
// kNone. `glbind` is indexed by column and read at first(J) only.
std::vector<Int> supernodal_parents(const SupernodePartition& partition,
                                    const IndexLists& glbind);

// Nonzeros of L (including explicit zeros) for supernodes with `rows`
// row indices and `cols` columns: the lower trapezoid rows*cols - cols(cols-1)/2.
inline Int trapezoid_nnz(Int rows, Int cols) {
  return rows * cols - cols * (cols - 1) / 2;
}

}  // namespace spchol

#endif  // SPCHOL_SUPERNODES_HPP_
