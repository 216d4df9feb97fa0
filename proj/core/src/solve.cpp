#include "spchol/solve.hpp"

#include <cmath>
#include <stdexcept>

namespace spchol {

std::vector<double> solve(const FactorStorage& f, std::span<const double> b) {
  if (f.state() != FactorState::kHoldsL) throw std::logic_error("solve: storage does not hold L");
  const SymbolicFactor& s = f.symbolic();
  if (static_cast<Int>(b.size()) != s.n) throw std::invalid_argument("solve: size mismatch");
  std::vector<double> x(b.begin(), b.end());

  for (Int j = 0; j < s.size(); ++j) {
    const ConstPanelView l = f.panel(j);
    const auto rows = s.glbind(j);
    const Int first = s.first(j);
    for (Int c = 0; c < l.cols; ++c) {
      const double xc = x[first + c] / l(c, c);
      x[first + c] = xc;
      for (Int r = c + 1; r < l.rows; ++r) x[rows[r]] -= l(r, c) * xc;
    }
  }
  for (Int j = s.size() - 1; j >= 0; --j) {
    const ConstPanelView l = f.panel(j);
    const auto rows = s.glbind(j);
    const Int first = s.first(j);
    for (Int c = l.cols - 1; c >= 0; --c) {
      double v = x[first + c];
      for (Int r = c + 1; r < l.rows; ++r) v -= l(r, c) * x[rows[r]];
      x[first + c] = v / l(c, c);
    }
  }
  return x;
}

double relative_residual(const SymmetricSparseMatrix& a, std::span<const double> x,
                         std::span<const double> b) {
  const std::vector<double> ax = a.multiply(x);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    num += (ax[i] - b[i]) * (ax[i] - b[i]);
    den += b[i] * b[i];
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace spchol
