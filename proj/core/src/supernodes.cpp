#include "spchol/supernodes.hpp"

#include <algorithm>

namespace spchol {

SupernodePartition::SupernodePartition(std::vector<Int> starts)
    : starts_(std::move(starts)) {
  if (starts_.empty() || starts_.front() != 0) {
    throw std::invalid_argument("supernode partition must start at column 0");
  }
  for (std::size_t s = 1; s < starts_.size(); ++s) {
    if (starts_[s] <= starts_[s - 1]) {
      throw std::invalid_argument("supernode partition has an empty supernode");
    }
  }
  member_.resize(starts_.back());
  for (Int s = 0; s < size(); ++s) {
    std::fill(member_.begin() + starts_[s], member_.begin() + starts_[s + 1], s);
  }
}

SupernodePartition SupernodePartition::singletons(Int n) {
  std::vector<Int> starts(n + 1);
  for (Int j = 0; j <= n; ++j) starts[j] = j;
  return SupernodePartition(std::move(starts));
}

SupernodePartition fundamental_supernodes(const EliminationTree& tree,
                                          const IndexLists& glbind) {
  const Int n = tree.size();
  std::vector<Int> starts;
  for (Int j = 0; j < n; ++j) {
    const bool joins_previous =
        j > 0 && tree.parent[j - 1] == j && tree.children[j].size() == 1 &&
        glbind[j - 1].size() == glbind[j].size() + 1;
    if (!joins_previous) starts.push_back(j);
  }
  starts.push_back(n);
  return SupernodePartition(std::move(starts));
}

std::vector<Int> supernodal_parents(const SupernodePartition& partition,
                                    const IndexLists& glbind) {
  std::vector<Int> parent(partition.size(), kNone);
  for (Int s = 0; s < partition.size(); ++s) {
    const auto& rows = glbind[partition.first(s)];
    auto it = std::upper_bound(rows.begin(), rows.end(), partition.last(s));
    if (it != rows.end()) parent[s] = partition.supernode_of(*it);
  }
  return parent;
}

}  // namespace spchol
