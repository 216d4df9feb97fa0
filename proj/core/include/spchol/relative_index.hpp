#ifndef SPCHOL_RELATIVE_INDEX_HPP_
#define SPCHOL_RELATIVE_INDEX_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "spchol/symbolic.hpp"

namespace spchol {

enum class IndexMode { kGlobal, kRelative };

class IndexModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// For every non-root supernode J, the list glbind(J) ∩ glbind(p(J)) (the rows
// below J's columns). In global mode entries are row indices; in relative
// mode each row i is replaced by its distance from the bottom of
// glbind(p(J)), i.e. |glbind(p(J))| - 1 - position(i). Lists share one arena.
class RelativeIndexMap {
 public:
  RelativeIndexMap() = default;
  explicit RelativeIndexMap(const SymbolicFactor& s);

  IndexMode mode() const noexcept { return mode_; }
  Int size() const noexcept { return static_cast<Int>(start_.size()) - 1; }
  std::span<const Int> list(Int s) const {
    return {data_.data() + start_[s], static_cast<std::size_t>(start_[s + 1] - start_[s])};
  }

  // Both throw IndexModeError when called in the wrong mode.
  void to_relative(const SymbolicFactor& s);
  void to_global(const SymbolicFactor& s);

 private:
  std::vector<Int> start_{0};
  std::vector<Int> data_;
  IndexMode mode_ = IndexMode::kGlobal;
};

// Holds a map in relative mode for the lifetime of the scope.
class RelativeModeScope {
 public:
  RelativeModeScope(RelativeIndexMap& map, const SymbolicFactor& s)
      : map_(map), s_(s) {
    map_.to_relative(s_);
  }
  ~RelativeModeScope() { map_.to_global(s_); }
  RelativeModeScope(const RelativeModeScope&) = delete;
  RelativeModeScope& operator=(const RelativeModeScope&) = delete;

 private:
  RelativeIndexMap& map_;
  const SymbolicFactor& s_;
};

// relind(J, P) from relind(J, C) and relind(C, P): entry k becomes
// rel_cp[|rel_cp| - 1 - rel_jc[k]]. Throws std::out_of_range when an entry
// of rel_jc does not address rel_cp. `out` must have rel_jc.size() entries
// and may alias rel_jc.
void compose_relative(std::span<const Int> rel_jc, std::span<const Int> rel_cp,
                      std::span<Int> out);
std::vector<Int> compose_relative(std::span<const Int> rel_jc,
                                  std::span<const Int> rel_cp);

// One entry per block: the relative index of the block's first row. Throws
// std::invalid_argument unless `block_sizes` partitions `relind`.
std::vector<Int> extract_block_relind(std::span<const Int> relind,
                                      std::span<const Int> block_sizes);

}  // namespace spchol

#endif  // SPCHOL_RELATIVE_INDEX_HPP_
