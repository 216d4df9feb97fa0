#ifndef SPCHOL_WORKSPACE_HPP_
#define SPCHOL_WORKSPACE_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "spchol/types.hpp"

namespace spchol {

class WorkspaceOverflow : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floating-point arena for update matrices plus an integer scratch vector of
// length n. The arena starts zeroed; callers that rely on zeros must restore
// them.
class UpdateWorkspace {
 public:
  UpdateWorkspace() = default;
  UpdateWorkspace(Int reals, Int n);

  std::span<double> arena() noexcept { return arena_; }
  Int capacity() const noexcept { return static_cast<Int>(arena_.size()); }
  // Bytes of floating-point scratch allocated.
  Int bytes_allocated() const noexcept {
    return capacity() * static_cast<Int>(sizeof(double));
  }

  // Records that the first `reals` entries of the arena are in use. Throws
  // WorkspaceOverflow past capacity.
  void use(Int reals);
  Int peak() const noexcept { return peak_; }

  std::vector<Int>& ints() noexcept { return ints_; }

 private:
  std::vector<double> arena_;
  std::vector<Int> ints_;
  Int peak_ = 0;
};

}  // namespace spchol

#endif  // SPCHOL_WORKSPACE_HPP_
