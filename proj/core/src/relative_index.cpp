#include "spchol/relative_index.hpp"

#include <string>

namespace spchol {

RelativeIndexMap::RelativeIndexMap(const SymbolicFactor& s) {
  start_.reserve(s.size() + 1);
  for (Int j = 0; j < s.size(); ++j) {
    if (s.parent[j] != kNone) {
      const auto below = s.below(j);
      data_.insert(data_.end(), below.begin(), below.end());
    }
    start_.push_back(static_cast<Int>(data_.size()));
  }
}

void RelativeIndexMap::to_relative(const SymbolicFactor& s) {
  if (mode_ != IndexMode::kGlobal) {
    throw IndexModeError("relative index map is already in relative mode");
  }
  for (Int j = 0; j < size(); ++j) {
    const Int p = s.parent[j];
    if (p == kNone) continue;
    const auto parent_rows = s.glbind(p);
    const Int length = s.length(p);
    // Both lists ascend, so a single forward sweep locates every row.
    Int pos = 0;
    for (Int q = start_[j]; q < start_[j + 1]; ++q) {
      while (parent_rows[pos] != data_[q]) ++pos;
      data_[q] = length - 1 - pos;
    }
  }
  mode_ = IndexMode::kRelative;
}

void RelativeIndexMap::to_global(const SymbolicFactor& s) {
  if (mode_ != IndexMode::kRelative) {
    throw IndexModeError("relative index map is already in global mode");
  }
  for (Int j = 0; j < size(); ++j) {
    const Int p = s.parent[j];
    if (p == kNone) continue;
    const auto parent_rows = s.glbind(p);
    const Int length = s.length(p);
    for (Int q = start_[j]; q < start_[j + 1]; ++q) {
      data_[q] = parent_rows[length - 1 - data_[q]];
    }
  }
  mode_ = IndexMode::kGlobal;
}

void compose_relative(std::span<const Int> rel_jc, std::span<const Int> rel_cp,
                      std::span<Int> out) {
  const Int length = static_cast<Int>(rel_cp.size());
  for (std::size_t k = 0; k < rel_jc.size(); ++k) {
    const Int distance = rel_jc[k];
    if (distance < 0 || distance >= length) {
      throw std::out_of_range("compose_relative: distance " + std::to_string(distance) +
                              " outside list of length " + std::to_string(length));
    }
    out[k] = rel_cp[length - 1 - distance];
  }
}

std::vector<Int> compose_relative(std::span<const Int> rel_jc,
                                  std::span<const Int> rel_cp) {
  std::vector<Int> out(rel_jc.size());
  compose_relative(rel_jc, rel_cp, out);
  return out;
}

std::vector<Int> extract_block_relind(std::span<const Int> relind,
                                      std::span<const Int> block_sizes) {
  std::vector<Int> out;
  out.reserve(block_sizes.size());
  std::size_t offset = 0;
  for (Int size : block_sizes) {
    if (size <= 0 || offset + static_cast<std::size_t>(size) > relind.size()) {
      throw std::invalid_argument("extract_block_relind: blocks exceed relind list");
    }
    out.push_back(relind[offset]);
    offset += static_cast<std::size_t>(size);
  }
  if (offset != relind.size()) {
    throw std::invalid_argument("extract_block_relind: blocks do not cover relind list");
  }
  return out;
}

}  // namespace spchol
