#include <stdexcept>

#include "spchol/factor_methods.hpp"

namespace spchol {

void factor_ll(FactorStorage& f, UpdateWorkspace& w, KernelDispatch& k) {
  if (f.state() != FactorState::kHoldsA) throw std::logic_error("factor_ll: storage holds L");
  const SymbolicFactor& s = f.symbolic();
  FactorCounters& counters = k.counters();
  const Int count = s.size();
  std::vector<Int>& indmap = w.ints();
  std::vector<Int> rel(static_cast<std::size_t>(s.n));
  double* scratch = w.arena().data();

  // Supernodes waiting to update J are chained from head[J]; next[K] is the
  // offset into below(K) of K's first row not yet applied.
  std::vector<Int> head(count, kNone), link(count, kNone), next(count, 0);

  for (Int j = 0; j < count; ++j) {
    const auto rows_j = s.glbind(j);
    const Int len_j = s.length(j);
    for (Int q = 0; q < len_j; ++q) indmap[rows_j[q]] = len_j - 1 - q;
    const PanelView lj = f.panel(j);
    const Int first_j = s.first(j);
    const Int last_j = s.last(j);

    for (Int src = head[j]; src != kNone;) {
      const Int following = link[src];
      const auto below = s.below(src);
      const Int start = next[src];
      const auto rows = below.subspan(static_cast<std::size_t>(start));
      const Int r = static_cast<Int>(rows.size());
      Int t = 0;
      while (t < r && rows[t] <= last_j) ++t;
      const Int wk = s.width(src);
      const PanelView lk = f.panel(src);
      const Int p0 = wk + start;

      if (wk == 1) {
        // Scale-and-scatter straight into Lnz(J).
        for (Int a = 0; a < t; ++a) {
          const Int col = rows[a] - first_j;
          const double la = lk(p0 + a, 0);
          for (Int i = a; i < r; ++i) lj(len_j - 1 - indmap[rows[i]], col) -= lk(p0 + i, 0) * la;
        }
        counters.assembly_ops += t * r - t * (t - 1) / 2;
        counters.flops += flops::syrk(t, 1) + flops::gemm(r - t, t, 1);
      } else if (update_is_dense_in_target(s, j, rows, t)) {
        const Int top = len_j - 1 - indmap[rows[0]];
        const PanelView x = lk.block(p0, 0, t, wk);
        k.syrk(lj.block(top, top, t, t), x);
        if (r > t) k.gemm(lj.block(top + t, top, r - t, t), lk.block(p0 + t, 0, r - t, wk), x);
      } else {
        w.use(r * t);
        const PanelView u{scratch, r, t, r};
        const PanelView x = lk.block(p0, 0, t, wk);
        k.syrk(u.block(0, 0, t, t), x);
        if (r > t) k.gemm(u.block(t, 0, r - t, t), lk.block(p0 + t, 0, r - t, wk), x);
        for (Int i = 0; i < r; ++i) rel[i] = indmap[rows[i]];
        for (Int a = 0; a < t; ++a) {
          const Int col = len_j - 1 - rel[a];
          for (Int i = a; i < r; ++i) {
            lj(len_j - 1 - rel[i], col) += u(i, a);
            u(i, a) = 0.0;
          }
        }
        counters.assembly_ops += t * r - t * (t - 1) / 2;
      }

      next[src] = start + t;
      if (next[src] < static_cast<Int>(below.size())) {
        const Int target = s.partition.supernode_of(below[next[src]]);
        link[src] = head[target];
        head[target] = src;
      }
      src = following;
    }

    k.cdiv(f, j);
    if (s.below_count(j) > 0) {
      next[j] = 0;
      const Int target = s.parent[j];
      link[j] = head[target];
      head[target] = j;
    }
  }
  f.set_state(FactorState::kHoldsL);
}

}  // namespace spchol
