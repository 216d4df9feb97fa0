#include "spchol/ordering.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

namespace spchol {

Permutation minimum_degree_order(const SymmetricSparsePattern& a) {
  const Int n = a.size();
  std::vector<std::vector<Int>> adjacency(n);
  for (Int j = 0; j < n; ++j) {
    for (Int i : a.column(j).subspan(1)) {
      adjacency[j].push_back(i);
      adjacency[i].push_back(j);
    }
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());

  std::set<std::pair<Int, Int>> queue;  // (degree, vertex)
  for (Int v = 0; v < n; ++v) {
    queue.emplace(static_cast<Int>(adjacency[v].size()), v);
  }

  std::vector<Int> old_to_new(n, kNone);
  std::vector<Int> merged;
  for (Int step = 0; step < n; ++step) {
    const Int pivot = queue.begin()->second;
    queue.erase(queue.begin());
    old_to_new[pivot] = step;

    const std::vector<Int> neighbours = std::move(adjacency[pivot]);
    adjacency[pivot].clear();
    for (Int u : neighbours) {
      std::vector<Int>& list = adjacency[u];
      queue.erase({static_cast<Int>(list.size()), u});
      merged.clear();
      std::set_union(list.begin(), list.end(), neighbours.begin(),
                     neighbours.end(), std::back_inserter(merged));
      merged.erase(std::remove_if(merged.begin(), merged.end(),
                                  [&](Int w) { return w == u || w == pivot; }),
                   merged.end());
      list.swap(merged);
      queue.emplace(static_cast<Int>(list.size()), u);
    }
  }
  return Permutation::from_old_to_new(std::move(old_to_new));
}

}  // namespace spchol
