#include "spchol/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace spchol {

namespace {

const char* kind_name(MatrixMarketError::Kind kind) {
  switch (kind) {
    case MatrixMarketError::Kind::kIo: return "I/O error";
    case MatrixMarketError::Kind::kMalformedHeader: return "malformed header";
    case MatrixMarketError::Kind::kUnsupportedFormat: return "unsupported format";
    case MatrixMarketError::Kind::kNotSymmetric: return "matrix is not declared symmetric";
    case MatrixMarketError::Kind::kMalformedEntry: return "malformed entry";
    case MatrixMarketError::Kind::kIndexOutOfRange: return "index out of range";
  }
  return "error";
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '%';
}

}  // namespace

MatrixMarketError::MatrixMarketError(Kind kind, Int line, const std::string& detail)
    : std::runtime_error(std::string("Matrix Market ") + kind_name(kind) +
                         (line > 0 ? " at line " + std::to_string(line) : "") +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

SymmetricSparseMatrix read_matrix_market(std::istream& in) {
  using Kind = MatrixMarketError::Kind;
  std::string line;
  Int line_number = 0;

  if (!std::getline(in, line)) {
    throw MatrixMarketError(Kind::kMalformedHeader, 1, "empty input");
  }
  ++line_number;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || symmetry.empty()) {
    throw MatrixMarketError(Kind::kMalformedHeader, line_number,
                            "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  }
  object = lowercase(object);
  format = lowercase(format);
  field = lowercase(field);
  symmetry = lowercase(symmetry);
  if (object != "matrix") {
    throw MatrixMarketError(Kind::kMalformedHeader, line_number, "object must be 'matrix'");
  }
  if (format != "coordinate") {
    throw MatrixMarketError(Kind::kUnsupportedFormat, line_number,
                            "only coordinate format is supported");
  }
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer") {
    throw MatrixMarketError(Kind::kUnsupportedFormat, line_number,
                            "field '" + field + "' is not supported");
  }
  if (symmetry != "symmetric") {
    throw MatrixMarketError(Kind::kNotSymmetric, line_number,
                            "symmetry is '" + symmetry + "'");
  }

  Int rows = -1, cols = -1, entries = -1;
  while (std::getline(in, line)) {
    ++line_number;
    if (blank_or_comment(line)) continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> entries) || rows < 0 || entries < 0) {
      throw MatrixMarketError(Kind::kMalformedHeader, line_number, "bad size line");
    }
    break;
  }
  if (rows < 0) {
    throw MatrixMarketError(Kind::kMalformedHeader, line_number, "missing size line");
  }
  if (rows != cols) {
    throw MatrixMarketError(Kind::kNotSymmetric, line_number, "matrix is not square");
  }

  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(entries));
  while (static_cast<Int>(triplets.size()) < entries && std::getline(in, line)) {
    ++line_number;
    if (blank_or_comment(line)) continue;
    std::istringstream entry(line);
    Int i = 0, j = 0;
    double value = 1.0;
    if (!(entry >> i >> j) || (!pattern && !(entry >> value))) {
      throw MatrixMarketError(Kind::kMalformedEntry, line_number, "'" + line + "'");
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw MatrixMarketError(Kind::kIndexOutOfRange, line_number,
                              "(" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") outside " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
    triplets.push_back({i - 1, j - 1, value});
  }
  if (static_cast<Int>(triplets.size()) < entries) {
    throw MatrixMarketError(Kind::kMalformedEntry, line_number,
                            "expected " + std::to_string(entries) + " entries, found " +
                                std::to_string(triplets.size()));
  }

  if (pattern) {
    // Structure first (duplicates collapse), then synthesize values.
    SymmetricSparseMatrix structure = assemble_symmetric(rows, triplets);
    const auto& pat = structure.pattern();
    std::vector<Int> degree(rows, 0);
    for (Int col = 0; col < rows; ++col) {
      for (Int row : pat.column(col).subspan(1)) {
        ++degree[col];
        ++degree[row];
      }
    }
    std::vector<double> values(pat.nnz(), -1.0);
    for (Int col = 0; col < rows; ++col) {
      values[pat.colptr()[col]] = static_cast<double>(degree[col] + 1);
    }
    return SymmetricSparseMatrix(pat, std::move(values));
  }
  return assemble_symmetric(rows, triplets);
}

SymmetricSparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw MatrixMarketError(MatrixMarketError::Kind::kIo, 0, "cannot open " + path);
  }
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SymmetricSparseMatrix& a) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << a.size() << ' ' << a.size() << ' ' << a.nnz() << '\n';
  char buffer[64];
  const auto& pat = a.pattern();
  for (Int j = 0; j < a.size(); ++j) {
    for (Int q = pat.colptr()[j]; q < pat.colptr()[j + 1]; ++q) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", a.values()[q]);
      out << pat.rowind()[q] + 1 << ' ' << j + 1 << ' ' << buffer << '\n';
    }
  }
}

void write_matrix_market(const std::string& path, const SymmetricSparseMatrix& a) {
  std::ofstream out(path);
  if (!out) {
    throw MatrixMarketError(MatrixMarketError::Kind::kIo, 0, "cannot write " + path);
  }
  write_matrix_market(out, a);
}

}  // namespace spchol
