#include "spchol/etree.hpp"

#include <algorithm>
#include <iterator>

namespace spchol {

EliminationTree make_tree(std::vector<Int> parent) {
  EliminationTree tree;
  const Int n = static_cast<Int>(parent.size());
  tree.children.resize(n);
  for (Int j = 0; j < n; ++j) {
    if (parent[j] != kNone) tree.children[parent[j]].push_back(j);
  }
  tree.parent = std::move(parent);

  tree.postorder.reserve(n);
  std::vector<std::pair<Int, std::size_t>> stack;
  for (Int root = 0; root < n; ++root) {
    if (tree.parent[root] != kNone) continue;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, next_child] = stack.back();
      if (next_child < tree.children[node].size()) {
        const Int child = tree.children[node][next_child++];
        stack.emplace_back(child, 0);
      } else {
        tree.postorder.push_back(node);
        stack.pop_back();
      }
    }
  }
  return tree;
}

EliminationTree elimination_tree(const SymmetricSparsePattern& a) {
  const Int n = a.size();
  const auto rows = a.row_lists();
  std::vector<Int> parent(n, kNone);
  std::vector<Int> ancestor(n, kNone);
  for (Int k = 0; k < n; ++k) {
    for (Int i : rows[k]) {
      // Walk from i to the root of its current subtree, compressing the path.
      while (i != kNone && i < k) {
        const Int next = ancestor[i];
        ancestor[i] = k;
        if (next == kNone) {
          parent[i] = k;
          break;
        }
        i = next;
      }
    }
  }
  return make_tree(std::move(parent));
}

IndexLists symbolic_factorization(const SymmetricSparsePattern& a,
                                  const EliminationTree& tree) {
  const Int n = a.size();
  IndexLists glbind(n);
  std::vector<Int> merged;
  for (Int j = 0; j < n; ++j) {
    auto column = a.column(j);
    std::vector<Int> structure(column.begin(), column.end());
    for (Int child : tree.children[j]) {
      const auto& below = glbind[child];
      // glbind(child) \ {child} is a subset of rows >= j.
      merged.clear();
      std::set_union(structure.begin(), structure.end(), below.begin() + 1,
                     below.end(), std::back_inserter(merged));
      structure.swap(merged);
    }
    glbind[j] = std::move(structure);
  }
  return glbind;
}

Int count_fill(const SymmetricSparsePattern& a, const IndexLists& glbind) {
  Int factor_offdiag = 0;
  for (const auto& list : glbind) factor_offdiag += static_cast<Int>(list.size()) - 1;
  return factor_offdiag - (a.nnz() - a.size());
}

}  // namespace spchol
