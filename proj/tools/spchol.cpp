// spchol: analyze | factor | check | bench
//
// Exit status: 0 success, 1 numerical failure (pivot, or check tolerance),
// 2 input, I/O or usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "bench_record.hpp"
#include "runner.hpp"
#include "spchol/solve.hpp"

using namespace spchol;
using namespace spchol::bench;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string matrix;
  std::string method = "rlb";
  std::string backend = "reference";
  std::string order = "mindeg";
  bool pr = true;
  double merge_cap = 12.5;
  Int repeats = 1;
  std::uint64_t seed = 1;
  std::string csv;
  bool check = false;
};

void add_common(CLI::App* sub, Common& c, bool with_matrix = true) {
  if (with_matrix) {
    sub->add_option("matrix", c.matrix,
                    "Matrix Market file, grid2d:K[:C] or random:N:DENSITY:SEED")
        ->required();
  }
  sub->add_option("--backend", c.backend, "reference | vendor");
  sub->add_option("--order", c.order, "natural | mindeg | file:<path>");
  sub->add_flag("--pr,!--no-pr", c.pr, "partition refinement inside supernodes (default on)");
  sub->add_option("--merge-cap", c.merge_cap, "supernode merging cap in percent, 0 disables");
  sub->add_option("--seed", c.seed, "seed for the synthetic right-hand side");
  sub->add_option("--csv", c.csv, "write CSV here");
}

RunConfig config_for(const Common& c, Method m) {
  RunConfig config;
  config.method = m;
  config.backend = c.backend;
  config.order = c.order;
  config.pr = c.pr;
  config.merge_cap = c.merge_cap;
  config.repeats = c.repeats;
  config.check = c.check;
  return config;
}

int report_error(const StageError& e, const std::string& method) {
  std::cerr << "error [stage " << e.stage();
  if (!method.empty()) std::cerr << ", method " << method;
  std::cerr << "]: " << e.what() << '\n';
  return e.numeric() ? kExitNumeric : kExitInput;
}

std::string join(std::span<const Int> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

std::string label(Int s) { return s == kNone ? "-" : "J" + std::to_string(s + 1); }

// Solve with b = A x for a random x; returns the relative residual.
double solve_residual(const SymmetricSparseMatrix& a, const PreparedProblem& prepared,
                      const FactorStorage& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(a.size());
  for (double& v : x) v = u(rng);
  const std::vector<double> b = a.multiply(x);
  const std::vector<double> y = solve(f, prepared.order.apply(b));
  return relative_residual(a, prepared.order.unapply(y), b);
}

bool write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error [stage output]: cannot open " << path << " for writing\n";
    return false;
  }
  body(out);
  return static_cast<bool>(out);
}

// ---- analyze ----

int cmd_analyze(const Common& c, const std::string& supernode_csv) {
  Problem problem;
  std::shared_ptr<const PreparedProblem> prepared;
  try {
    problem = load_problem(c.matrix);
    prepared = prepare_problem(problem, config_for(c, Method::kRlb));
  } catch (const StageError& e) {
    return report_error(e, "");
  } catch (const std::exception& e) {
    return report_error(StageError("analyze", e.what(), false), "");
  }
  const AnalysisStats& st = prepared->analysis.stats;
  const SymbolicFactor& s = prepared->analysis.symbolic;
  std::cout << std::fixed << std::setprecision(2);
  std::cout << "matrix: " << problem.name << "  n=" << st.n << "  nnz(A)=" << st.nnz_a
            << " (lower triangle)\n";
  std::cout << "ordering: " << c.order << "  merge cap: " << c.merge_cap
            << "%  pr: " << (c.pr ? "on" : "off") << '\n';
  std::cout << "fill: " << st.fill << '\n';
  std::cout << "supernodes: " << st.fundamental_supernodes << " fundamental, "
            << st.merged_supernodes << " after merging (" << st.merges << " merges)\n";
  std::cout << "factor nnz: " << st.nnz_fundamental << " -> " << st.nnz_merged
            << "  storage growth " << st.storage_growth_percent() << "%\n";
  std::cout << "work (flops): " << st.work_fundamental << " -> " << st.work_merged
            << "  work growth " << st.work_growth_percent() << "%\n";
  std::cout << "blocks: " << st.blocks_before_pr << " before PR (mean length "
            << st.mean_block_before_pr() << "), " << st.blocks_after_pr
            << " after (mean length " << st.mean_block_after_pr() << ")\n";
  std::cout << "panel storage: " << s.panel_storage() << " reals\n";
  std::cout << "workspace plans (reals): mf " << s.plan.mf_stack << ", ll "
            << s.plan.ll_update << ", rl " << s.plan.rl_update << ", rlb 0\n";
  if (s.size() <= 40) {
    std::cout << "supernode  columns  rows  parent  blocks\n";
    for (Int j = 0; j < s.size(); ++j) {
      std::cout << "  " << label(j) << "  " << s.first(j) + 1 << ".." << s.last(j) + 1 << "  "
                << s.length(j) << "  " << label(s.parent[j]) << "  " << join(s.blocks(j))
                << '\n';
    }
  }
  bool ok = true;
  if (!c.csv.empty()) {
    ok = write_to(c.csv, [&](std::ostream& out) {
      out << std::setprecision(17) << std::defaultfloat;
      out << "matrix,n,nnz_a,fill,fundamental_supernodes,merged_supernodes,merges,"
             "nnz_fundamental,nnz_merged,storage_growth_percent,work_fundamental,"
             "work_merged,work_growth_percent,blocks_before_pr,blocks_after_pr,"
             "mean_block_before_pr,mean_block_after_pr,panel_storage,mf_workspace,"
             "ll_workspace,rl_workspace,rlb_workspace\n";
      out << csv_field(problem.name) << ',' << st.n << ',' << st.nnz_a << ',' << st.fill << ','
          << st.fundamental_supernodes << ',' << st.merged_supernodes << ',' << st.merges
          << ',' << st.nnz_fundamental << ',' << st.nnz_merged << ','
          << st.storage_growth_percent() << ',' << st.work_fundamental << ','
          << st.work_merged << ',' << st.work_growth_percent() << ',' << st.blocks_before_pr
          << ',' << st.blocks_after_pr << ',' << st.mean_block_before_pr() << ','
          << st.mean_block_after_pr() << ',' << s.panel_storage() << ',' << s.plan.mf_stack
          << ',' << s.plan.ll_update << ',' << s.plan.rl_update << ",0\n";
    });
  }
  if (ok && !supernode_csv.empty()) {
    ok = write_to(supernode_csv, [&](std::ostream& out) {
      out << "supernode,first_col,last_col,width,rows,below,parent,blocks,block_sizes\n";
      for (Int j = 0; j < s.size(); ++j) {
        std::string sizes;
        for (Int b : s.blocks(j)) sizes += (sizes.empty() ? "" : ";") + std::to_string(b);
        out << j + 1 << ',' << s.first(j) + 1 << ',' << s.last(j) + 1 << ',' << s.width(j)
            << ',' << s.length(j) << ',' << s.below_count(j) << ','
            << (s.parent[j] == kNone ? 0 : s.parent[j] + 1) << ',' << s.blocks(j).size()
            << ',' << sizes << '\n';
      }
    });
  }
  return ok ? 0 : kExitInput;
}

// ---- factor ----

int cmd_factor(const Common& c) {
  Method method;
  try {
    method = parse_method(c.method);
  } catch (const std::exception& e) {
    return report_error(StageError("args", e.what(), false), c.method);
  }
  Problem problem;
  RunOutcome run;
  double residual = 0.0;
  try {
    problem = load_problem(c.matrix);
    run = run_factor(problem, config_for(c, method));
    residual = solve_residual(problem.matrix, *run.prepared, run.result->storage, c.seed);
  } catch (const StageError& e) {
    return report_error(e, c.method);
  } catch (const std::exception& e) {
    return report_error(StageError("solve", e.what(), false), c.method);
  }
  const BenchRecord& r = run.record;
  const RunStats& st = run.result->stats;
  std::cout << std::setprecision(6);
  std::cout << "matrix: " << r.matrix << "  n=" << r.n << "  nnz(A)=" << r.nnz_a << '\n'
            << "method: " << r.method << "  backend: " << r.backend
            << "  ordering: " << r.ordering << "  pr: " << (r.pr ? "on" : "off")
            << "  merge cap: " << r.merge_cap << "%\n"
            << "seconds (" << r.aggregation << " of " << r.repeats << "): " << r.seconds << '\n'
            << "flops: " << r.flops << '\n'
            << "factor nnz: " << r.factor_nnz << "  panel storage: " << r.panel_storage << '\n'
            << "workspace: capacity " << r.workspace_capacity << "  peak " << r.workspace_peak
            << "  total storage " << r.total_storage << '\n'
            << "assembly ops: " << r.assembly_ops << '\n'
            << "kernel calls: potrf " << st.kernels.potrf << "  trsm " << st.kernels.trsm
            << "  syrk " << st.kernels.syrk << "  gemm " << st.kernels.gemm << "  total "
            << r.kernel_calls << '\n';
  if (!st.pair_calls.empty() && st.pair_calls.size() <= 64) {
    std::cout << "update kernel calls per pair:\n";
    for (const auto& [pair, calls] : st.pair_calls) {
      std::cout << "  " << label(pair.first) << " -> " << label(pair.second) << ": " << calls
                << '\n';
    }
  }
  std::cout << "solve residual: " << residual << '\n';
  if (c.check) std::cout << "check: max relative deviation " << r.max_rel_error << '\n';
  if (!c.csv.empty()) {
    if (!write_to(c.csv, [&](std::ostream& out) {
          write_csv_header(out);
          write_csv_row(out, r);
        })) {
      return kExitInput;
    }
  }
  if (c.check && !(r.max_rel_error <= 1e-10)) {
    std::cerr << "error [stage check, method " << r.method << "]: deviation " << r.max_rel_error
              << " exceeds 1e-10\n";
    return kExitNumeric;
  }
  return 0;
}

// ---- check ----

int cmd_check(const Common& c) {
  std::vector<Method> methods;
  if (c.method == "all") {
    methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
  } else {
    try {
      methods.push_back(parse_method(c.method));
    } catch (const std::exception& e) {
      return report_error(StageError("args", e.what(), false), c.method);
    }
  }
  Problem problem;
  std::shared_ptr<const PreparedProblem> prepared;
  RunConfig base = config_for(c, Method::kReference);
  base.check = true;
  base.repeats = 1;
  try {
    problem = load_problem(c.matrix);
    prepared = prepare_problem(problem, base);
  } catch (const StageError& e) {
    return report_error(e, "");
  } catch (const std::exception& e) {
    return report_error(StageError("analyze", e.what(), false), "");
  }
  const double residual_tol = static_cast<double>(problem.matrix.size()) * 1e-12;
  int status = 0;
  std::vector<BenchRecord> rows;
  std::cout << std::setprecision(3) << std::scientific;
  for (Method m : methods) {
    RunConfig config = base;
    config.method = m;
    try {
      RunOutcome run = run_factor_prepared(problem, prepared, config);
      const double res = solve_residual(problem.matrix, *prepared, run.result->storage, c.seed);
      const bool pass = run.record.max_rel_error <= 1e-10 && res <= residual_tol;
      std::cout << (pass ? "PASS " : "FAIL ") << method_name(m) << "  deviation "
                << run.record.max_rel_error << "  residual " << res << '\n';
      if (!pass) status = kExitNumeric;
      rows.push_back(run.record);
    } catch (const StageError& e) {
      std::cout << "FAIL " << method_name(m) << "  " << e.stage() << ": " << e.what() << '\n';
      status = std::max(status, e.numeric() ? kExitNumeric : kExitInput);
      rows.push_back(failed_record(problem, config, e));
    }
  }
  if (!c.csv.empty() && !write_to(c.csv, [&](std::ostream& out) {
        write_csv_header(out);
        for (const auto& r : rows) write_csv_row(out, r);
      })) {
    return kExitInput;
  }
  return status;
}

// ---- bench ----

struct BenchArgs {
  std::string list;
  std::string methods = "ref,mf,ll,rl,rlb";
  std::string profile;
  double tau_max = 2.0;
  double tau_step = 0.01;
};

std::vector<std::string> read_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StageError("load", "cannot open matrix list " + path, false);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    const auto b = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(a, b - a + 1);
    // Relative paths are taken relative to the list file.
    if (entry.rfind("grid2d:", 0) != 0 && entry.rfind("random:", 0) != 0 && entry[0] != '/') {
      const auto slash = path.find_last_of('/');
      if (slash != std::string::npos) entry = path.substr(0, slash + 1) + entry;
    }
    entries.push_back(entry);
  }
  return entries;
}

int cmd_bench(const Common& c, const BenchArgs& args) {
  std::vector<Method> methods;
  std::vector<std::string> entries;
  std::vector<double> taus;
  try {
    std::stringstream in(args.methods);
    std::string name;
    while (std::getline(in, name, ',')) methods.push_back(parse_method(name));
    entries = read_list(args.list);
    taus = tau_grid(1.0, args.tau_max, args.tau_step);
  } catch (const StageError& e) {
    return report_error(e, "");
  } catch (const std::exception& e) {
    return report_error(StageError("args", e.what(), false), "");
  }
  std::vector<BenchRecord> rows;
  for (const std::string& entry : entries) {
    Problem problem{entry, {}};
    std::shared_ptr<const PreparedProblem> prepared;
    std::optional<StageError> early;
    try {
      problem = load_problem(entry);
      prepared = prepare_problem(problem, config_for(c, Method::kRlb));
    } catch (const StageError& e) {
      early = e;
    } catch (const std::exception& e) {
      early = StageError("analyze", e.what(), false);
    }
    for (Method m : methods) {
      const RunConfig config = config_for(c, m);
      if (early) {
        rows.push_back(failed_record(problem, config, *early));
        continue;
      }
      try {
        rows.push_back(run_factor_prepared(problem, prepared, config).record);
      } catch (const StageError& e) {
        rows.push_back(failed_record(problem, config, e));
      }
      std::cerr << entry << ' ' << method_name(m) << ": " << rows.back().status << '\n';
    }
  }
  bool ok = write_to(c.csv, [&](std::ostream& out) {
    write_csv_header(out);
    for (const auto& r : rows) write_csv_row(out, r);
  });
  if (ok && !args.profile.empty()) {
    // Extend the grid so every curve that can reach 1 does.
    const double worst = max_ratio(rows);
    if (worst > taus.back()) taus.push_back(worst);
    ok = write_to(args.profile, [&](std::ostream& out) {
      write_profile_csv(out, performance_profile(rows, taus));
    });
  }
  return ok ? 0 : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supernodal sparse Cholesky: analysis, factorization and benchmarks"};
  app.require_subcommand(1);

  Common analyze_args;
  std::string supernode_csv;
  auto* analyze = app.add_subcommand("analyze", "symbolic analysis report");
  add_common(analyze, analyze_args);
  analyze->add_option("--supernodes-csv", supernode_csv, "per-supernode CSV");

  Common factor_args;
  auto* factor = app.add_subcommand("factor", "factor one matrix and print its record");
  add_common(factor, factor_args);
  factor->add_option("--method", factor_args.method, "ref | mf | ll | rl | rlb");
  factor->add_option("--repeats", factor_args.repeats, "timed runs (odd), median reported");
  factor->add_flag("--check", factor_args.check, "compare against the reference factor");

  Common check_args;
  check_args.method = "all";
  auto* check = app.add_subcommand("check", "compare methods against the reference factor");
  add_common(check, check_args);
  check->add_option("--method", check_args.method, "method name or all");

  Common bench_args;
  bench_args.repeats = 7;
  BenchArgs bench_extra;
  auto* bench = app.add_subcommand("bench", "time methods over a list of matrices");
  add_common(bench, bench_args, false);
  bench->add_option("list", bench_extra.list, "file with one matrix path or spec per line")
      ->required();
  bench->add_option("--methods", bench_extra.methods, "comma-separated methods");
  bench->add_option("--repeats", bench_args.repeats, "timed runs per method (odd)");
  bench->add_flag("--check", bench_args.check, "also record deviation from the reference");
  bench->add_option("--profile", bench_extra.profile, "performance-profile CSV");
  bench->add_option("--tau-max", bench_extra.tau_max, "profile grid upper end");
  bench->add_option("--tau-step", bench_extra.tau_step, "profile grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  for (Common* c : {&factor_args, &bench_args}) {
    if (c->repeats < 1 || c->repeats % 2 == 0) {
      std::cerr << "error [stage args]: --repeats must be a positive odd number\n";
      return kExitInput;
    }
  }
  if (*analyze) return cmd_analyze(analyze_args, supernode_csv);
  if (*factor) return cmd_factor(factor_args);
  if (*check) return cmd_check(check_args);
  return cmd_bench(bench_args, bench_extra);
}
