#ifndef SPCHOL_ETREE_HPP_
#define SPCHOL_ETREE_HPP_

#include <vector>

#include "spchol/permutation.hpp"

namespace spchol {

// Elimination forest of the Cholesky factor. parent[j] == kNone marks a root;
// otherwise parent[j] > j.
struct EliminationTree {
  std::vector<Int> parent;
  // Children in ascending order.
  std::vector<std::vector<Int>> children;
  // postorder[k] is the k-th column visited; subtrees are contiguous and
  // parents follow their children.
  std::vector<Int> postorder;

  Int size() const noexcept { return static_cast<Int>(parent.size()); }

  // Relabels columns so that new column k is postorder[k].
  Permutation postorder_permutation() const {
    return Permutation::from_new_to_old(postorder);
  }
};

// Builds the tree from parent pointers (children and postorder derived).
EliminationTree make_tree(std::vector<Int> parent);

// Parent pointers via path-compressed ancestor walks; does not form L.
EliminationTree elimination_tree(const SymmetricSparsePattern& a);

// Row structure of every factor column: glbind[j] lists the rows i with
// L(i, j) != 0, ascending, starting with j. Computed by merging each column
// of A with its children's structures.
using IndexLists = std::vector<std::vector<Int>>;
IndexLists symbolic_factorization(const SymmetricSparsePattern& a,
                                  const EliminationTree& tree);

// Off-diagonal nonzeros of L that are absent from A.
Int count_fill(const SymmetricSparsePattern& a, const IndexLists& glbind);

}  // namespace spchol

#endif  // SPCHOL_ETREE_HPP_
