#include "bench_record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace spchol::bench {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& column) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw std::runtime_error("bad number '" + s + "' in column " + column);
  return v;
}

Int parse_int(const std::string& s, const std::string& column) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("bad integer '" + s + "' in column " + column);
  }
  return v;
}

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

bool operator==(const BenchRecord& a, const BenchRecord& b) {
  return a.matrix == b.matrix && a.method == b.method && a.backend == b.backend &&
         a.ordering == b.ordering && a.pr == b.pr && same_double(a.merge_cap, b.merge_cap) &&
         a.n == b.n && a.nnz_a == b.nnz_a && same_double(a.seconds, b.seconds) &&
         a.flops == b.flops && a.factor_nnz == b.factor_nnz &&
         a.panel_storage == b.panel_storage && a.workspace_capacity == b.workspace_capacity &&
         a.workspace_peak == b.workspace_peak && a.total_storage == b.total_storage &&
         a.assembly_ops == b.assembly_ops && a.kernel_calls == b.kernel_calls &&
         a.repeats == b.repeats && a.aggregation == b.aggregation &&
         same_double(a.max_rel_error, b.max_rel_error) && a.status == b.status;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns{
      "matrix",         "method",         "backend",        "ordering",
      "pr",             "merge_cap",      "n",              "nnz_a",
      "seconds",        "flops",          "factor_nnz",     "panel_storage",
      "workspace_capacity", "workspace_peak", "total_storage", "assembly_ops",
      "kernel_calls",   "repeats",        "aggregation",    "max_rel_error",
      "status"};
  return columns;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

void write_csv_header(std::ostream& out) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  const std::vector<std::string> fields{
      csv_field(r.matrix),
      csv_field(r.method),
      csv_field(r.backend),
      csv_field(r.ordering),
      r.pr ? "1" : "0",
      format_double(r.merge_cap),
      std::to_string(r.n),
      std::to_string(r.nnz_a),
      format_double(r.seconds),
      std::to_string(r.flops),
      std::to_string(r.factor_nnz),
      std::to_string(r.panel_storage),
      std::to_string(r.workspace_capacity),
      std::to_string(r.workspace_peak),
      std::to_string(r.total_storage),
      std::to_string(r.assembly_ops),
      std::to_string(r.kernel_calls),
      std::to_string(r.repeats),
      csv_field(r.aggregation),
      format_double(r.max_rel_error),
      csv_field(r.status)};
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  const auto header = split_csv_line(line);
  if (header != csv_columns()) throw std::runtime_error("unexpected CSV header");
  std::vector<BenchRecord> out;
  Int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) {
      throw std::runtime_error("line " + std::to_string(line_number) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(f.size()));
    }
    std::map<std::string, std::string> by;
    for (std::size_t i = 0; i < f.size(); ++i) by[header[i]] = f[i];
    auto integer = [&](const char* c) { return parse_int(by[c], c); };
    BenchRecord r;
    r.matrix = by["matrix"];
    r.method = by["method"];
    r.backend = by["backend"];
    r.ordering = by["ordering"];
    if (by["pr"] != "0" && by["pr"] != "1") throw std::runtime_error("bad pr flag " + by["pr"]);
    r.pr = by["pr"] == "1";
    r.merge_cap = parse_double(by["merge_cap"], "merge_cap");
    r.n = integer("n");
    r.nnz_a = integer("nnz_a");
    r.seconds = parse_double(by["seconds"], "seconds");
    r.flops = integer("flops");
    r.factor_nnz = integer("factor_nnz");
    r.panel_storage = integer("panel_storage");
    r.workspace_capacity = integer("workspace_capacity");
    r.workspace_peak = integer("workspace_peak");
    r.total_storage = integer("total_storage");
    r.assembly_ops = integer("assembly_ops");
    r.kernel_calls = integer("kernel_calls");
    r.repeats = integer("repeats");
    r.aggregation = by["aggregation"];
    r.max_rel_error = parse_double(by["max_rel_error"], "max_rel_error");
    r.status = by["status"];
    out.push_back(std::move(r));
  }
  return out;
}

double median(std::vector<double> xs) {
  if (xs.empty() || xs.size() % 2 == 0) {
    throw std::invalid_argument("median needs an odd number of samples");
  }
  const auto mid = xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2);
  std::nth_element(xs.begin(), mid, xs.end());
  return *mid;
}

std::vector<double> tau_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(lo >= 1.0) || hi < lo) {
    throw std::invalid_argument("tau grid needs 1 <= lo <= hi and step > 0");
  }
  std::vector<double> taus;
  for (Int i = 0;; ++i) {
    // Round so 1 + 100 * 0.01 prints and compares as 2.
    const double t = std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9;
    if (t > hi * (1 + 1e-12)) break;
    taus.push_back(t);
  }
  return taus;
}

namespace {

// Per-matrix best successful time, with a floor so zero timings compare.
constexpr double kTimeFloor = 1e-9;

std::map<std::string, double> best_times(const std::vector<BenchRecord>& records) {
  std::map<std::string, double> best;
  for (const auto& r : records) {
    if (!r.ok()) continue;
    const double t = std::max(r.seconds, kTimeFloor);
    auto [it, inserted] = best.emplace(r.matrix, t);
    if (!inserted) it->second = std::min(it->second, t);
  }
  return best;
}

}  // namespace

std::vector<ProfilePoint> performance_profile(const std::vector<BenchRecord>& records,
                                              const std::vector<double>& taus) {
  std::vector<std::string> methods;
  std::map<std::string, std::vector<double>> ratios;  // method -> ratio per matrix
  const auto best = best_times(records);
  std::map<std::string, bool> matrices;
  for (const auto& r : records) matrices[r.matrix] = true;
  for (const auto& r : records) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
    if (!r.ok()) continue;
    ratios[r.method].push_back(std::max(r.seconds, kTimeFloor) / best.at(r.matrix));
  }
  const double count = static_cast<double>(matrices.size());
  std::vector<ProfilePoint> out;
  for (const auto& m : methods) {
    for (double tau : taus) {
      Int within = 0;
      for (double ratio : ratios[m]) {
        if (ratio <= tau * (1 + 1e-12)) ++within;
      }
      out.push_back({m, tau, count == 0 ? 0.0 : static_cast<double>(within) / count});
    }
  }
  return out;
}

double max_ratio(const std::vector<BenchRecord>& records) {
  const auto best = best_times(records);
  double worst = 1.0;
  for (const auto& r : records) {
    if (r.ok()) worst = std::max(worst, std::max(r.seconds, kTimeFloor) / best.at(r.matrix));
  }
  return worst;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& points) {
  out << "method,tau,fraction\n";
  for (const auto& p : points) {
    out << csv_field(p.method) << ',' << format_double(p.tau) << ','
        << format_double(p.fraction) << '\n';
  }
}

}  // namespace spchol::bench
