#include "spchol/partition_refinement.hpp"

#include <algorithm>
#include <unordered_set>

namespace spchol {

OrderedPartition::OrderedPartition(std::vector<Int> ground)
    : ground_size_(static_cast<Int>(ground.size())) {
  if (!ground.empty()) cells_.push_back(std::move(ground));
}

OrderedPartition OrderedPartition::from_cells(std::vector<std::vector<Int>> cells) {
  OrderedPartition p;
  std::unordered_set<Int> seen;
  for (const auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("ordered partition: empty cell");
    for (Int e : cell) {
      if (!seen.insert(e).second) {
        throw std::invalid_argument("ordered partition: cells overlap");
      }
    }
  }
  p.ground_size_ = static_cast<Int>(seen.size());
  p.cells_ = std::move(cells);
  return p;
}

std::vector<Int> OrderedPartition::order() const {
  std::vector<Int> out;
  out.reserve(ground_size_);
  for (const auto& cell : cells_) out.insert(out.end(), cell.begin(), cell.end());
  return out;
}

void OrderedPartition::refine(std::span<const Int> pivot) {
  std::unordered_set<Int> in_pivot(pivot.begin(), pivot.end());
  std::size_t matched = 0;
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    std::size_t hits = 0;
    for (Int e : cells_[c]) hits += in_pivot.count(e);
    if (hits > 0) touched.push_back(c);
    matched += hits;
  }
  if (matched != in_pivot.size()) {
    throw std::invalid_argument("refine: pivot element outside the ground set");
  }

  std::vector<std::vector<Int>> next;
  next.reserve(cells_.size() + touched.size());
  std::size_t t = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (t == touched.size() || touched[t] != c) {
      next.push_back(std::move(cells_[c]));
      continue;
    }
    std::vector<Int> inside, outside;
    for (Int e : cells_[c]) (in_pivot.count(e) ? inside : outside).push_back(e);
    const bool leftmost_of_several = t == 0 && touched.size() > 1;
    ++t;
    if (outside.empty()) {
      next.push_back(std::move(inside));
    } else if (leftmost_of_several) {
      next.push_back(std::move(outside));
      next.push_back(std::move(inside));
    } else {
      next.push_back(std::move(inside));
      next.push_back(std::move(outside));
    }
  }
  cells_ = std::move(next);
}

OrderedPartition refine(OrderedPartition partition, std::span<const Int> pivot) {
  partition.refine(pivot);
  return partition;
}

Int count_runs(std::span<const Int> sorted_values) {
  Int runs = 0;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    if (i == 0 || sorted_values[i] != sorted_values[i - 1] + 1) ++runs;
  }
  return runs;
}

namespace {

// Blocks that the pivot sets form within a supernode under `rank` (local
// position of each column, indexed by column - first).
Int blocks_under(const std::vector<std::vector<Int>>& sets, Int first,
                 const std::vector<Int>& rank) {
  Int total = 0;
  std::vector<Int> positions;
  for (const auto& set : sets) {
    positions.clear();
    for (Int col : set) positions.push_back(rank[col - first]);
    std::sort(positions.begin(), positions.end());
    total += count_runs(positions);
  }
  return total;
}

}  // namespace

ReorderResult reorder_within_supernodes(const SymbolicFactor& s) {
  const Int count = s.size();

  // updates[P] = (K, glbind(K) ∩ P) for every K updating P, in ascending K.
  std::vector<std::vector<std::pair<Int, std::vector<Int>>>> updates(count);
  for (Int k = 0; k < count; ++k) {
    const auto below = s.below(k);
    for (std::size_t t = 0; t < below.size();) {
      const Int target = s.partition.supernode_of(below[t]);
      std::size_t run = t;
      while (run < below.size() && below[run] <= s.last(target)) ++run;
      updates[target].emplace_back(
          k, std::vector<Int>(below.begin() + static_cast<std::ptrdiff_t>(t),
                              below.begin() + static_cast<std::ptrdiff_t>(run)));
      t = run;
    }
  }

  ReorderResult result;
  std::vector<Int> old_to_new(s.n);
  for (Int p = 0; p < count; ++p) {
    const Int first = s.first(p);
    const Int width = s.width(p);
    auto& pivots = updates[p];
    std::stable_sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) {
      return a.second.size() > b.second.size();
    });

    std::vector<Int> ground(width);
    for (Int c = 0; c < width; ++c) ground[c] = first + c;
    OrderedPartition partition(ground);
    for (const auto& [k, set] : pivots) partition.refine(set);
    const std::vector<Int> refined = partition.order();

    std::vector<Int> identity_rank(width), refined_rank(width);
    for (Int c = 0; c < width; ++c) identity_rank[c] = c;
    for (Int c = 0; c < width; ++c) refined_rank[refined[c] - first] = c;

    std::vector<std::vector<Int>> sets;
    for (const auto& entry : pivots) sets.push_back(entry.second);
    const Int before = blocks_under(sets, first, identity_rank);
    const Int after = blocks_under(sets, first, refined_rank);
    result.blocks_before += before;
    if (after <= before) {
      result.blocks_after += after;
      for (Int c = 0; c < width; ++c) old_to_new[first + c] = first + refined_rank[c];
    } else {
      result.blocks_after += before;
      ++result.kept_supernodes;
      for (Int c = 0; c < width; ++c) old_to_new[first + c] = first + c;
    }
  }
  result.permutation = Permutation::from_old_to_new(std::move(old_to_new));

  std::vector<std::vector<Int>> relabeled(count);
  for (Int j = 0; j < count; ++j) {
    for (Int row : s.glbind(j)) relabeled[j].push_back(result.permutation.new_index(row));
    std::sort(relabeled[j].begin(), relabeled[j].end());
  }
  result.symbolic = make_symbolic_factor(s.partition, std::move(relabeled));
  return result;
}

}  // namespace spchol
