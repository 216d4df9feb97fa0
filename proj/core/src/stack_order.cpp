#include "spchol/stack_order.hpp"

#include <algorithm>
#include <numeric>

namespace spchol {

Int subtree_peak(std::span<const StackProfile> ordered_children, Int front) {
  Int peak = 0;
  Int below = 0;
  Int top_retained = 0;
  for (const StackProfile& child : ordered_children) {
    peak = std::max(peak, below + child.peak);
    below += child.retained;
    if (child.retained > 0) top_retained = child.retained;
  }
  peak = std::max(peak, below);
  if (front > 0) peak = std::max(peak, below - top_retained + front);
  return peak;
}

ChildOrder order_children(std::span<const StackProfile> children, Int front) {
  const Int k = static_cast<Int>(children.size());
  std::vector<Int> liu(k);
  std::iota(liu.begin(), liu.end(), Int{0});
  std::stable_sort(liu.begin(), liu.end(), [&](Int a, Int b) {
    return children[a].peak - children[a].retained >
           children[b].peak - children[b].retained;
  });

  std::vector<StackProfile> ordered(k);
  auto evaluate = [&](const std::vector<Int>& order) {
    for (Int i = 0; i < k; ++i) ordered[i] = children[order[i]];
    return subtree_peak(ordered, front);
  };

  ChildOrder best{liu, evaluate(liu)};
  std::vector<Int> order;
  for (Int top = 0; top < k; ++top) {
    if (children[top].retained == 0) continue;
    order.clear();
    for (Int c : liu) {
      if (c != top) order.push_back(c);
    }
    order.push_back(top);
    const Int peak = evaluate(order);
    if (peak < best.peak) best = {order, peak};
  }
  return best;
}

StackPlan liu_sibling_order(std::span<const Int> parent,
                            std::span<const Int> front,
                            std::span<const Int> retained, bool reorder) {
  const Int count = static_cast<Int>(parent.size());
  StackPlan plan;
  plan.children.resize(count);
  for (Int s = 0; s < count; ++s) {
    if (parent[s] != kNone) plan.children[parent[s]].push_back(s);
  }

  // parent[s] > s, so ascending order visits children before parents.
  std::vector<StackProfile> profile(count);
  std::vector<StackProfile> kids;
  for (Int s = 0; s < count; ++s) {
    auto& list = plan.children[s];
    kids.clear();
    for (Int c : list) kids.push_back(profile[c]);
    if (reorder) {
      ChildOrder chosen = order_children(kids, front[s]);
      std::vector<Int> reordered;
      for (Int i : chosen.order) reordered.push_back(list[i]);
      list.swap(reordered);
      profile[s].peak = chosen.peak;
    } else {
      profile[s].peak = subtree_peak(kids, front[s]);
    }
    profile[s].retained = retained[s];
  }

  std::vector<std::pair<Int, std::size_t>> stack;
  for (Int root = 0; root < count; ++root) {
    if (parent[root] != kNone) continue;
    plan.peak = std::max(plan.peak, profile[root].peak);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < plan.children[node].size()) {
        const Int child = plan.children[node][next++];
        stack.emplace_back(child, 0);
      } else {
        plan.postorder.push_back(node);
        stack.pop_back();
      }
    }
  }
  return plan;
}

}  // namespace spchol
