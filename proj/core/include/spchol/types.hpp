#ifndef SPCHOL_TYPES_HPP_
#define SPCHOL_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spchol {

// Signed index type used for dimensions, offsets and counts throughout.
// All internal indices are 0-based; files and CLI output are 1-based.
using Int = std::int64_t;

// Sentinel for "no parent" in elimination trees.
inline constexpr Int kNone = -1;

// Raised when a pivot is not positive. `supernode` is kNone when raised by a
// dense kernel outside of a sparse factorization. `column` is the 0-based
// column index: local to the dense block for kernels, global for drivers.
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(const std::string& what, Int supernode, Int column)
      : std::runtime_error(what), supernode_(supernode), column_(column) {}

  Int supernode() const noexcept { return supernode_; }
  Int column() const noexcept { return column_; }

 private:
  Int supernode_;
  Int column_;
};

}  // namespace spchol

#endif  // SPCHOL_TYPES_HPP_
