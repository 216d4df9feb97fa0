#ifndef SPCHOL_TOOLS_BENCH_RECORD_HPP_
#define SPCHOL_TOOLS_BENCH_RECORD_HPP_

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "spchol/types.hpp"

namespace spchol::bench {

// One (matrix, method) measurement. Timing is the median over `repeats`
// runs of the numerical factorization; counters come from the last run
// (they are identical across repeats).
struct BenchRecord {
  std::string matrix;
  std::string method;
  std::string backend;
  std::string ordering;
  bool pr = true;
  double merge_cap = 12.5;
  Int n = 0;
  Int nnz_a = 0;
  double seconds = 0.0;
  Int flops = 0;
  Int factor_nnz = 0;
  Int panel_storage = 0;
  Int workspace_capacity = 0;
  Int workspace_peak = 0;
  Int total_storage = 0;
  Int assembly_ops = 0;
  Int kernel_calls = 0;
  Int repeats = 1;
  std::string aggregation = "median";
  double max_rel_error = std::numeric_limits<double>::quiet_NaN();  // --check only
  std::string status = "ok";  // "ok" or the error message

  bool ok() const { return status == "ok"; }
  friend bool operator==(const BenchRecord&, const BenchRecord&);
};

// Column names, in output order.
const std::vector<std::string>& csv_columns();

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& r);
// Header first, then rows. Throws std::runtime_error on a malformed row.
std::vector<BenchRecord> read_csv(std::istream& in);

// RFC 4180 style field splitting: commas, double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);
std::string csv_field(const std::string& s);

// Median of an odd-length sample; throws std::invalid_argument otherwise.
double median(std::vector<double> xs);

struct ProfilePoint {
  std::string method;
  double tau = 1.0;
  double fraction = 0.0;
};

// tau = lo, lo + step, ..., up to hi (inclusive within rounding).
std::vector<double> tau_grid(double lo, double hi, double step);

// For each method (in first-seen order) and each tau: the fraction of
// matrices on which the method's time is within tau of the fastest
// successful method on that matrix. Failed runs never count.
std::vector<ProfilePoint> performance_profile(const std::vector<BenchRecord>& records,
                                              const std::vector<double>& taus);

// Largest finite time ratio to the per-matrix best (1 when nothing ran).
double max_ratio(const std::vector<BenchRecord>& records);

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points);

}  // namespace spchol::bench

#endif  // SPCHOL_TOOLS_BENCH_RECORD_HPP_
