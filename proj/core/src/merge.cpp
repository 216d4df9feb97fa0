#include "spchol/merge.hpp"

#include <algorithm>
#include <iterator>
#include <queue>
#include <tuple>

namespace spchol {

namespace {

Int union_size(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++count;
  }
  return count + static_cast<Int>((a.end() - i) + (b.end() - j));
}

struct Candidate {
  Int cost;
  Int first_column;  // of the child
  Int child;
  Int child_version;
  Int parent;
  Int parent_version;

  bool operator>(const Candidate& other) const {
    return std::tie(cost, first_column, child) >
           std::tie(other.cost, other.first_column, other.child);
  }
};

}  // namespace

Int merge_cost(const std::vector<Int>& child_rows, Int child_width,
               const std::vector<Int>& parent_rows, Int parent_width) {
  const Int merged = trapezoid_nnz(union_size(child_rows, parent_rows),
                                   child_width + parent_width);
  return merged - trapezoid_nnz(static_cast<Int>(child_rows.size()), child_width) -
         trapezoid_nnz(static_cast<Int>(parent_rows.size()), parent_width);
}

MergeResult unmerged(const SupernodePartition& partition, const IndexLists& glbind) {
  MergeResult result;
  const Int count = partition.size();
  result.parent = supernodal_parents(partition, glbind);
  for (Int s = 0; s < count; ++s) {
    result.members.push_back({s});
    result.rows.push_back(glbind[partition.first(s)]);
    result.widths.push_back(partition.width(s));
    result.nnz_before += trapezoid_nnz(
        static_cast<Int>(result.rows.back().size()), partition.width(s));
  }
  result.nnz_after = result.nnz_before;
  return result;
}

MergeResult merge_supernodes(const SupernodePartition& partition,
                             const IndexLists& glbind, double cap_percent) {
  if (cap_percent < 0.0) throw std::invalid_argument("merge cap must be >= 0");
  MergeResult base = unmerged(partition, glbind);
  const Int count = partition.size();

  // Working state indexed by representative (the topmost input supernode of
  // each group; a group's parent always has a larger representative).
  std::vector<Int> parent = base.parent;
  std::vector<std::vector<Int>> children(count);
  for (Int s = 0; s < count; ++s) {
    if (parent[s] != kNone) children[parent[s]].push_back(s);
  }
  std::vector<std::vector<Int>> rows = std::move(base.rows);
  std::vector<std::vector<Int>> members = std::move(base.members);
  std::vector<Int> widths = std::move(base.widths);
  std::vector<Int> first_column(count);
  std::vector<Int> version(count, 0);
  std::vector<bool> alive(count, true);
  for (Int s = 0; s < count; ++s) first_column[s] = partition.first(s);

  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  auto push = [&](Int child) {
    const Int p = parent[child];
    if (p == kNone) return;
    heap.push({merge_cost(rows[child], widths[child], rows[p], widths[p]),
               first_column[child], child, version[child], p, version[p]});
  };
  for (Int s = 0; s < count; ++s) push(s);

  const double nnz_limit =
      static_cast<double>(base.nnz_before) * (1.0 + cap_percent / 100.0);
  Int nnz = base.nnz_before;
  Int merges = 0;
  std::vector<Int> merged_rows;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (!alive[top.child] || !alive[top.parent] ||
        version[top.child] != top.child_version ||
        version[top.parent] != top.parent_version ||
        parent[top.child] != top.parent) {
      continue;
    }
    if (static_cast<double>(nnz + top.cost) > nnz_limit) break;

    const Int child = top.child;
    const Int p = top.parent;
    nnz += top.cost;
    ++merges;

    merged_rows.clear();
    std::set_union(rows[child].begin(), rows[child].end(), rows[p].begin(),
                   rows[p].end(), std::back_inserter(merged_rows));
    rows[p].swap(merged_rows);
    rows[child].clear();
    widths[p] += widths[child];
    first_column[p] = std::min(first_column[p], first_column[child]);
    members[p].insert(members[p].end(), members[child].begin(), members[child].end());
    std::sort(members[p].begin(), members[p].end());
    members[child].clear();

    auto& siblings = children[p];
    siblings.erase(std::find(siblings.begin(), siblings.end(), child));
    for (Int grandchild : children[child]) {
      parent[grandchild] = p;
      siblings.push_back(grandchild);
    }
    std::sort(siblings.begin(), siblings.end());
    children[child].clear();
    alive[child] = false;
    ++version[p];

    push(p);
    for (Int c : siblings) push(c);
  }

  // Compact to group indices in ascending representative order.
  MergeResult result;
  result.nnz_before = base.nnz_before;
  result.nnz_after = nnz;
  result.merges = merges;
  std::vector<Int> group_of(count, kNone);
  for (Int s = 0; s < count; ++s) {
    if (!alive[s]) continue;
    group_of[s] = result.size();
    result.members.push_back(std::move(members[s]));
    result.rows.push_back(std::move(rows[s]));
    result.widths.push_back(widths[s]);
  }
  result.parent.resize(result.size(), kNone);
  for (Int s = 0; s < count; ++s) {
    if (alive[s] && parent[s] != kNone) result.parent[group_of[s]] = group_of[parent[s]];
  }
  return result;
}

}  // namespace spchol
