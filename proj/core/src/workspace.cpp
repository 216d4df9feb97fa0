#include "spchol/workspace.hpp"

#include <algorithm>
#include <string>

namespace spchol {

UpdateWorkspace::UpdateWorkspace(Int reals, Int n)
    : arena_(static_cast<std::size_t>(reals), 0.0), ints_(static_cast<std::size_t>(n), 0) {}

void UpdateWorkspace::use(Int reals) {
  if (reals > capacity()) {
    throw WorkspaceOverflow("update workspace overflow: need " + std::to_string(reals) +
                            " reals, have " + std::to_string(capacity()));
  }
  peak_ = std::max(peak_, reals);
}

}  // namespace spchol
