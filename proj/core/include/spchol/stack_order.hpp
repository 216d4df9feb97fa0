#ifndef SPCHOL_STACK_ORDER_HPP_
#define SPCHOL_STACK_ORDER_HPP_

#include <span>
#include <vector>

#include "spchol/types.hpp"

namespace spchol {

// Multifrontal stack model. Processing the subtree of a child needs `peak`
// reals above the stack level at which it starts and leaves `retained` reals
// (its packed update matrix) behind.
//
// A supernode with children c_1..c_k (pushed in that order) then needs
//   max_i (retained(c_1..c_{i-1}) + peak(c_i))
// while the children run, and, when it owns a front of `front` reals, places
// that front over the topmost child update matrix:
//   retained(all children) - retained(top child) + front.
struct StackProfile {
  Int peak = 0;
  Int retained = 0;
};

// Peak of a supernode whose children are processed in the given order.
Int subtree_peak(std::span<const StackProfile> ordered_children, Int front);

struct ChildOrder {
  std::vector<Int> order;  // indices into the input span
  Int peak = 0;
};

// Sibling order minimizing subtree_peak. For each choice of the topmost
// child the remaining children are sorted by decreasing peak - retained
// (Liu's rule), and the best choice is kept.
ChildOrder order_children(std::span<const StackProfile> children, Int front);

// Per-supernode sizes for a whole supernodal tree: front[J] is the square
// update-matrix size |U_J^s| and retained[J] the packed size of what is left
// after the parent's columns are removed.
struct StackPlan {
  // Children of every node in processing order.
  std::vector<std::vector<Int>> children;
  // Nodes in processing (post)order.
  std::vector<Int> postorder;
  Int peak = 0;
};

// Plans the multifrontal stack for a forest with parent[J] > J. With
// `reorder` false children keep ascending order; otherwise each sibling set
// is ordered by order_children. Roots are processed in ascending order.
StackPlan liu_sibling_order(std::span<const Int> parent,
                            std::span<const Int> front,
                            std::span<const Int> retained, bool reorder);

}  // namespace spchol

#endif  // SPCHOL_STACK_ORDER_HPP_
