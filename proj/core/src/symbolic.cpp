#include "spchol/symbolic.hpp"

#include <algorithm>
#include <string>

#include "spchol/stack_order.hpp"

namespace spchol {

Int SymbolicFactor::position(Int s, Int row) const {
  const auto list = glbind(s);
  auto it = std::lower_bound(list.begin(), list.end(), row);
  if (it == list.end() || *it != row) return kNone;
  return static_cast<Int>(it - list.begin());
}

std::vector<std::vector<Int>> SymbolicFactor::children() const {
  std::vector<std::vector<Int>> kids(size());
  for (Int s = 0; s < size(); ++s) {
    if (parent[s] != kNone) kids[parent[s]].push_back(s);
  }
  return kids;
}

std::vector<Int> block_partition(std::span<const Int> below_rows,
                                 const SupernodePartition& partition) {
  std::vector<Int> sizes;
  for (std::size_t i = 0; i < below_rows.size(); ++i) {
    const bool continues =
        i > 0 && below_rows[i] == below_rows[i - 1] + 1 &&
        partition.supernode_of(below_rows[i]) == partition.supernode_of(below_rows[i - 1]);
    if (continues) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
    }
  }
  return sizes;
}

bool update_is_dense_in_target(const SymbolicFactor& s, Int target,
                               std::span<const Int> rows, Int in_target) {
  if (rows.empty() || in_target == 0) return true;
  if (rows[in_target - 1] - rows[0] != in_target - 1) return false;
  const Int top = s.position(target, rows.front());
  const Int bottom = s.position(target, rows.back());
  return bottom - top == static_cast<Int>(rows.size()) - 1;
}

std::vector<Int> mf_front_sizes(const SymbolicFactor& s) {
  std::vector<Int> front(s.size());
  for (Int j = 0; j < s.size(); ++j) front[j] = s.below_count(j) * s.below_count(j);
  return front;
}

std::vector<Int> mf_retained_sizes(const SymbolicFactor& s) {
  std::vector<Int> retained(s.size(), 0);
  for (Int j = 0; j < s.size(); ++j) {
    const Int p = s.parent[j];
    if (p == kNone) continue;
    const auto below = s.below(j);
    const Int beyond = static_cast<Int>(
        below.end() - std::upper_bound(below.begin(), below.end(), s.last(p)));
    retained[j] = beyond * (beyond + 1) / 2;
  }
  return retained;
}

SymbolicFactor make_symbolic_factor(SupernodePartition partition,
                                    std::vector<std::vector<Int>> supernode_rows) {
  SymbolicFactor s;
  s.n = partition.columns();
  s.partition = std::move(partition);
  const Int count = s.partition.size();
  if (static_cast<Int>(supernode_rows.size()) != count) {
    throw std::invalid_argument("symbolic: one row list per supernode required");
  }

  for (Int j = 0; j < count; ++j) {
    const auto& list = supernode_rows[j];
    const Int width = s.partition.width(j);
    if (static_cast<Int>(list.size()) < width) {
      throw std::invalid_argument("symbolic: row list shorter than supernode");
    }
    for (Int k = 0; k < width; ++k) {
      if (list[k] != s.partition.first(j) + k) {
        throw std::invalid_argument("symbolic: row list must begin with own columns");
      }
    }
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (list[k] <= list[k - 1] || list[k] >= s.n) {
        throw std::invalid_argument("symbolic: row list not ascending within range");
      }
    }
    s.rows.insert(s.rows.end(), list.begin(), list.end());
    s.row_start.push_back(static_cast<Int>(s.rows.size()));
    s.panel_start.push_back(s.panel_start.back() +
                            static_cast<Int>(list.size()) * width);
    s.factor_nnz += trapezoid_nnz(static_cast<Int>(list.size()), width);
  }

  s.parent.assign(count, kNone);
  for (Int j = 0; j < count; ++j) {
    const auto below = s.below(j);
    if (below.empty()) continue;
    const Int p = s.partition.supernode_of(below.front());
    s.parent[j] = p;
    for (Int row : below) {
      if (s.position(p, row) == kNone) {
        throw std::invalid_argument(
            "symbolic: row " + std::to_string(row + 1) + " of supernode " +
            std::to_string(j + 1) + " missing from its parent");
      }
    }
  }

  for (Int j = 0; j < count; ++j) {
    const auto sizes = block_partition(s.below(j), s.partition);
    s.block_sizes.insert(s.block_sizes.end(), sizes.begin(), sizes.end());
    s.block_start.push_back(static_cast<Int>(s.block_sizes.size()));
  }

  for (Int j = 0; j < count; ++j) {
    s.plan.rl_update = std::max(s.plan.rl_update, s.below_count(j) * s.below_count(j));
  }
  for (Int k = 0; k < count; ++k) {
    if (s.width(k) == 1) continue;
    const auto below = s.below(k);
    for (std::size_t t = 0; t < below.size();) {
      const Int target = s.partition.supernode_of(below[t]);
      std::size_t run = t;
      while (run < below.size() && below[run] <= s.last(target)) ++run;
      const auto rows = below.subspan(t);
      const Int in_target = static_cast<Int>(run - t);
      if (!update_is_dense_in_target(s, target, rows, in_target)) {
        s.plan.ll_update =
            std::max(s.plan.ll_update, static_cast<Int>(rows.size()) * in_target);
      }
      t = run;
    }
  }
  const auto front = mf_front_sizes(s);
  const auto retained = mf_retained_sizes(s);
  s.plan.mf_stack = liu_sibling_order(s.parent, front, retained, false).peak;
  return s;
}

std::string validate(const SymbolicFactor& s) {
  const Int count = s.size();
  if (static_cast<Int>(s.parent.size()) != count) return "parent size mismatch";
  for (Int j = 0; j < count; ++j) {
    const Int p = s.parent[j];
    if (p != kNone && p <= j) return "parent not above child at " + std::to_string(j);
    const auto list = s.glbind(j);
    for (Int k = 0; k < s.width(j); ++k) {
      if (list[k] != s.first(j) + k) return "own columns missing at " + std::to_string(j);
    }
    Int sum = 0;
    for (Int b : s.blocks(j)) sum += b;
    if (sum != s.below_count(j)) return "blocks do not cover rows at " + std::to_string(j);
    if (p == kNone) {
      if (s.below_count(j) != 0) return "root with rows below";
      continue;
    }
    for (Int row : s.below(j)) {
      if (s.position(p, row) == kNone) return "containment violated at " + std::to_string(j);
    }
  }
  // Ascending order must be a postorder: the subtree of J is a contiguous
  // range ending at J.
  std::vector<Int> subtree(count, 1);
  std::vector<Int> lowest(count);
  for (Int j = 0; j < count; ++j) lowest[j] = j;
  for (Int j = 0; j < count; ++j) {
    if (j - lowest[j] + 1 != subtree[j]) return "numbering is not a postorder";
    const Int p = s.parent[j];
    if (p != kNone) {
      subtree[p] += subtree[j];
      lowest[p] = std::min(lowest[p], lowest[j]);
    }
  }
  return {};
}

}  // namespace spchol
