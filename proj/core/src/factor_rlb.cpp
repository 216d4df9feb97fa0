#include <stdexcept>

#include "spchol/factor_methods.hpp"

namespace spchol {

void factor_rlb(FactorStorage& f, RelativeIndexMap& r, KernelDispatch& k) {
  if (f.state() != FactorState::kHoldsA) throw std::logic_error("factor_rlb: storage holds L");
  const SymbolicFactor& s = f.symbolic();
  FactorCounters& counters = k.counters();
  RelativeModeScope relative(r, s);
  std::vector<Int> first_row;

  for (Int j = 0; j < s.size(); ++j) {
    k.cdiv(f, j);
    if (s.below_count(j) == 0) continue;
    const Int width = s.width(j);
    const auto blocks = s.blocks(j);
    const Int nb = static_cast<Int>(blocks.size());
    std::vector<Int> rel_b = extract_block_relind(r.list(j), blocks);
    first_row.assign(static_cast<std::size_t>(nb), width);
    for (Int b = 1; b < nb; ++b) first_row[b] = first_row[b - 1] + blocks[b - 1];
    const PanelView lj = f.panel(j);

    Int p = s.parent[j];
    Int b = 0;
    while (true) {
      const Int len_p = s.length(p);
      const Int in_p_from = len_p - s.width(p);
      Int e = b;
      while (e < nb && rel_b[e] >= in_p_from) ++e;
      PanelView lp = f.panel(p);
      counters.pair_calls.push_back({j, p, 0});
      Int& calls = counters.pair_calls.back().calls;
      for (Int blk = b; blk < e; ++blk) {
        const Int pos = len_p - 1 - rel_b[blk];
        const Int size = blocks[blk];
        const PanelView x = lj.block(first_row[blk], 0, size, width);
        k.syrk(lp.block(pos, pos, size, size), x);
        ++calls;
        // Later blocks that sit next to each other in glbind(P) go in one call.
        for (Int c = blk + 1; c < nb;) {
          Int d = c;
          Int rows = blocks[c];
          while (d + 1 < nb && rel_b[d] - blocks[d] == rel_b[d + 1]) {
            ++d;
            rows += blocks[d];
          }
          k.gemm(lp.block(len_p - 1 - rel_b[c], pos, rows, size),
                 lj.block(first_row[c], 0, rows, width), x);
          ++calls;
          c = d + 1;
        }
      }
      b = e;
      if (b == nb) break;
      const std::span<Int> rest(rel_b.data() + b, static_cast<std::size_t>(nb - b));
      compose_relative(rest, r.list(p), rest);
      p = s.parent[p];
    }
  }
  f.set_state(FactorState::kHoldsL);
}

}  // namespace spchol
