#include <stdexcept>

#include "spchol/factor_methods.hpp"

namespace spchol {

void factor_rl(FactorStorage& f, RelativeIndexMap& r, UpdateWorkspace& w, KernelDispatch& k) {
  if (f.state() != FactorState::kHoldsA) throw std::logic_error("factor_rl: storage holds L");
  const SymbolicFactor& s = f.symbolic();
  FactorCounters& counters = k.counters();
  RelativeModeScope relative(r, s);
  double* u = w.arena().data();
  std::vector<Int>& rel = w.ints();

  for (Int j = 0; j < s.size(); ++j) {
    k.cdiv(f, j);
    const Int m = s.below_count(j);
    if (m == 0) continue;
    const Int width = s.width(j);
    w.use(m * m);
    k.syrk(PanelView{u, m, m, m}, f.panel(j).block(width, 0, m, width));

    const auto own = r.list(j);
    std::copy(own.begin(), own.end(), rel.begin());
    Int p = s.parent[j];
    Int done = 0;
    while (true) {
      const Int len_p = s.length(p);
      const Int in_p_from = len_p - s.width(p);
      Int t = done;
      while (t < m && rel[t] >= in_p_from) ++t;
      PanelView lp = f.panel(p);
      for (Int a = done; a < t; ++a) {
        const Int col = len_p - 1 - rel[a];
        double* ucol = u + a * m;
        for (Int i = a; i < m; ++i) {
          lp(len_p - 1 - rel[i], col) += ucol[i];
          ucol[i] = 0.0;
        }
        counters.assembly_ops += m - a;
      }
      done = t;
      if (done == m) break;
      // Remaining rows lie below P; re-express them relative to p(P).
      const std::span<Int> rest(rel.data() + done, static_cast<std::size_t>(m - done));
      compose_relative(rest, r.list(p), rest);
      p = s.parent[p];
    }
  }
  f.set_state(FactorState::kHoldsL);
}

}  // namespace spchol
