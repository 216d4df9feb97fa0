#ifndef SPCHOL_MATRIX_MARKET_HPP_
#define SPCHOL_MATRIX_MARKET_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spchol/sparse_matrix.hpp"

namespace spchol {

class MatrixMarketError : public std::runtime_error {
 public:
  enum class Kind {
    kIo,
    kMalformedHeader,
    kUnsupportedFormat,
    kNotSymmetric,
    kMalformedEntry,
    kIndexOutOfRange,
  };

  MatrixMarketError(Kind kind, Int line, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  // 1-based line number in the input; 0 when not tied to a line.
  Int line() const noexcept { return line_; }

 private:
  Kind kind_;
  Int line_;
};

// Reads a symmetric coordinate Matrix Market stream (real, integer or
// pattern). Pattern files get synthesized values: -1 off the diagonal and
// degree + 1 on it. Explicit zeros are kept as structural entries.
SymmetricSparseMatrix read_matrix_market(std::istream& in);
SymmetricSparseMatrix read_matrix_market(const std::string& path);

// Writes the lower triangle as "coordinate real symmetric" with
// round-trippable (%.17g) values.
void write_matrix_market(std::ostream& out, const SymmetricSparseMatrix& a);
void write_matrix_market(const std::string& path, const SymmetricSparseMatrix& a);

}  // namespace spchol

#endif  // SPCHOL_MATRIX_MARKET_HPP_
