#include "runner.hpp"

#include <sstream>
#include <vector>

#include "spchol/generate.hpp"
#include "spchol/matrix_market.hpp"
#include "spchol/ordering.hpp"

namespace spchol::bench {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

Int to_int(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw StageError("load", "bad number in '" + spec + "'", false);
  return v;
}

double to_double(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw StageError("load", "bad number in '" + spec + "'", false);
  return v;
}

Problem synthetic(const std::string& spec) {
  const auto parts = split(spec, ':');
  try {
    if (parts[0] == "grid2d" && (parts.size() == 2 || parts.size() == 3)) {
      const Int r = to_int(parts[1], spec);
      const Int c = parts.size() == 3 ? to_int(parts[2], spec) : r;
      return {spec, grid_laplacian_2d(r, c)};
    }
    if (parts[0] == "random" && parts.size() == 4) {
      return {spec, generate_spd(to_int(parts[1], spec), to_double(parts[2], spec),
                                 static_cast<std::uint64_t>(to_int(parts[3], spec)))};
    }
  } catch (const std::invalid_argument& e) {
    throw StageError("load", spec + ": " + e.what(), false);
  }
  throw StageError("load", "cannot parse matrix spec '" + spec + "'", false);
}

bool is_synthetic(const std::string& spec) {
  return spec.rfind("grid2d:", 0) == 0 || spec.rfind("random:", 0) == 0;
}

}  // namespace

Problem load_problem(const std::string& spec) {
  if (is_synthetic(spec)) return synthetic(spec);
  try {
    return {spec, read_matrix_market(spec)};
  } catch (const std::exception& e) {
    throw StageError("load", e.what(), false);
  }
}

Permutation fill_order(const SymmetricSparseMatrix& a, const std::string& order) {
  try {
    if (order == "natural") return Permutation::identity(a.size());
    if (order == "mindeg") return minimum_degree_order(a.pattern());
    if (order.rfind("file:", 0) == 0) {
      Permutation p = read_permutation_file(order.substr(5));
      if (p.size() != a.size()) {
        throw std::invalid_argument("ordering file has " + std::to_string(p.size()) +
                                    " entries, matrix has order " + std::to_string(a.size()));
      }
      return p;
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("order", e.what(), false);
  }
  throw StageError("order", "unknown ordering '" + order + "' (natural, mindeg, file:<path>)",
                   false);
}

AnalysisOptions analysis_options(const RunConfig& config) {
  AnalysisOptions options;
  options.merge = config.merge_cap > 0.0;
  options.merge_cap = config.merge_cap;
  options.partition_refinement = config.pr;
  return options;
}

BenchRecord failed_record(const Problem& problem, const RunConfig& config,
                          const StageError& e) {
  BenchRecord r;
  r.matrix = problem.name;
  r.method = std::string(method_name(config.method));
  r.backend = config.backend;
  r.ordering = config.order;
  r.pr = config.pr;
  r.merge_cap = config.merge_cap;
  r.n = problem.matrix.size();
  r.nnz_a = problem.matrix.nnz();
  r.repeats = config.repeats;
  r.seconds = std::numeric_limits<double>::quiet_NaN();
  r.status = e.stage() + ": " + e.what();
  return r;
}

std::shared_ptr<const PreparedProblem> prepare_problem(const Problem& problem,
                                                       const RunConfig& config) {
  const Permutation order = fill_order(problem.matrix, config.order);
  try {
    return std::make_shared<const PreparedProblem>(
        prepare(problem.matrix, order, analysis_options(config)));
  } catch (const std::exception& e) {
    throw StageError("analyze", e.what(), false);
  }
}

RunOutcome run_factor(const Problem& problem, const RunConfig& config) {
  return run_factor_prepared(problem, prepare_problem(problem, config), config);
}

RunOutcome run_factor_prepared(const Problem& problem,
                               std::shared_ptr<const PreparedProblem> prepared,
                               const RunConfig& config) {
  if (config.repeats < 1 || config.repeats % 2 == 0) {
    throw StageError("factor", "repeats must be odd and positive", false);
  }
  const KernelBackend* backend = nullptr;
  try {
    backend = &backend_by_name(config.backend);
  } catch (const std::exception& e) {
    throw StageError("factor", e.what(), false);
  }
  RunOutcome out;
  out.prepared = std::move(prepared);
  const SymbolicFactor& s = out.prepared->analysis.symbolic;
  std::vector<double> times;
  for (Int rep = 0; rep < config.repeats; ++rep) {
    try {
      out.result.emplace(factorize(out.prepared->matrix, s, config.method, *backend));
    } catch (const NotPositiveDefiniteError& e) {
      throw StageError("factor", std::string(method_name(config.method)) + ": " + e.what(),
                       true);
    } catch (const std::exception& e) {
      throw StageError("factor", std::string(method_name(config.method)) + ": " + e.what(),
                       false);
    }
    times.push_back(out.result->stats.seconds);
  }
  const RunStats& st = out.result->stats;
  BenchRecord& r = out.record;
  r.matrix = problem.name;
  r.method = std::string(method_name(config.method));
  r.backend = st.backend;
  r.ordering = config.order;
  r.pr = config.pr;
  r.merge_cap = config.merge_cap;
  r.n = problem.matrix.size();
  r.nnz_a = problem.matrix.nnz();
  r.seconds = median(times);
  r.flops = st.flops;
  r.factor_nnz = st.factor_nnz;
  r.panel_storage = st.panel_storage;
  r.workspace_capacity = st.workspace_capacity;
  r.workspace_peak = st.workspace_peak;
  r.total_storage = st.total_storage();
  r.assembly_ops = st.assembly_ops;
  r.kernel_calls = st.kernels.total();
  r.repeats = config.repeats;
  if (config.check) {
    try {
      const FactorResult ref = factorize(out.prepared->matrix, s, Method::kReference);
      r.max_rel_error = relative_max_error(out.result->storage.values(), ref.storage.values());
    } catch (const NotPositiveDefiniteError& e) {
      throw StageError("check", e.what(), true);
    }
  }
  return out;
}

}  // namespace spchol::bench
