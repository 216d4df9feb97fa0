#include <algorithm>
#include <stdexcept>

#include "spchol/factor_methods.hpp"

namespace spchol {

namespace {

// Packed lower triangle of an r x r update matrix, stored column by column.
struct StackEntry {
  Int owner;
  Int offset;
  Int rows;
};

Int packed_offset(Int i, Int a, Int r) { return a * r - a * (a - 1) / 2 + (i - a); }

}  // namespace

void factor_mf(FactorStorage& f, RelativeIndexMap& r, UpdateWorkspace& w, KernelDispatch& k) {
  if (f.state() != FactorState::kHoldsA) throw std::logic_error("factor_mf: storage holds L");
  const SymbolicFactor& s = f.symbolic();
  FactorCounters& counters = k.counters();
  RelativeModeScope relative(r, s);

  // Invariant: every arena entry above `top` is zero.
  double* arena = w.arena().data();
  std::vector<StackEntry> stack;
  Int top = 0;

  for (Int j = 0; j < s.size(); ++j) {
    const Int width = s.width(j);
    const Int m = s.below_count(j);

    std::size_t first_child = stack.size();
    while (first_child > 0 && s.parent[stack[first_child - 1].owner] == j) --first_child;
    const Int base = first_child < stack.size() ? stack[first_child].offset : top;
    const Int ubase = first_child < stack.size() ? stack.back().offset : top;

    if (m == 0 && first_child < stack.size()) {
      throw std::logic_error("factor_mf: update matrix pushed toward a root");
    }

    double* u = arena + ubase;
    if (m > 0) {
      w.use(ubase + m * m);
      if (first_child < stack.size()) {
        // Grow the topmost child's packed matrix into U_J in place. Square
        // positions are never below packed ones, so moving entries from the
        // last to the first never overwrites one still to be read.
        const StackEntry top_child = stack.back();
        stack.pop_back();
        const auto rel = r.list(top_child.owner).last(static_cast<std::size_t>(top_child.rows));
        const Int rr = top_child.rows;
        for (Int a = rr - 1; a >= 0; --a) {
          const Int col = m - 1 - rel[a];
          for (Int i = rr - 1; i >= a; --i) {
            const Int from = packed_offset(i, a, rr);
            const Int to = col * m + (m - 1 - rel[i]);
            const double v = u[from];
            u[from] = 0.0;
            u[to] = v;
          }
        }
      }
      while (stack.size() > first_child) {
        const StackEntry child = stack.back();
        stack.pop_back();
        const auto rel = r.list(child.owner).last(static_cast<std::size_t>(child.rows));
        const double* packed = arena + child.offset;
        const Int rr = child.rows;
        for (Int a = 0; a < rr; ++a) {
          const Int col = m - 1 - rel[a];
          for (Int i = a; i < rr; ++i) u[col * m + (m - 1 - rel[i])] += *packed++;
        }
        counters.assembly_ops += rr * (rr + 1) / 2;
      }
    }

    k.cdiv(f, j);

    if (m == 0) {
      if (!stack.empty()) counters.mf_stack_clean = false;
      top = base;
      continue;
    }

    const PanelView lj = f.panel(j);
    k.syrk(PanelView{u, m, m, m}, lj.block(width, 0, m, width));

    // Columns of the parent go straight into Lnz(P).
    const Int p = s.parent[j];
    const auto rel = r.list(j);
    const Int len_p = s.length(p);
    const Int in_parent_from = len_p - s.width(p);
    Int t = 0;
    while (t < m && rel[t] >= in_parent_from) ++t;
    PanelView lp = f.panel(p);
    for (Int a = 0; a < t; ++a) {
      const Int col = len_p - 1 - rel[a];
      const double* ucol = u + a * m;
      for (Int i = a; i < m; ++i) lp(len_p - 1 - rel[i], col) += ucol[i];
    }
    counters.assembly_ops += t * m - t * (t - 1) / 2;

    // Pack the rest down to the base of the first child. Destinations never
    // pass their sources, so an ascending sweep is safe.
    const Int rr = m - t;
    Int q = base;
    for (Int a = t; a < m; ++a) {
      for (Int i = a; i < m; ++i) arena[q++] = u[a * m + i];
    }
    std::fill(arena + q, arena + ubase + m * m, 0.0);
    if (rr > 0) stack.push_back({j, base, rr});
    top = q;
  }
  if (!stack.empty()) counters.mf_stack_clean = false;
  f.set_state(FactorState::kHoldsL);
}

}  // namespace spchol
