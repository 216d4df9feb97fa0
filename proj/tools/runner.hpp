#ifndef SPCHOL_TOOLS_RUNNER_HPP_
#define SPCHOL_TOOLS_RUNNER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "bench_record.hpp"
#include "spchol/factorize.hpp"

namespace spchol::bench {

// Error tagged with the pipeline stage that raised it ("load", "order",
// "analyze", "factor", "check"). `numeric` marks pivot failures.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what, bool numeric)
      : std::runtime_error(what), stage_(std::move(stage)), numeric_(numeric) {}
  const std::string& stage() const noexcept { return stage_; }
  bool numeric() const noexcept { return numeric_; }

 private:
  std::string stage_;
  bool numeric_;
};

struct Problem {
  std::string name;
  SymmetricSparseMatrix matrix;
};

// A Matrix Market path, or a synthetic spec:
//   grid2d:K             K x K five-point Laplacian
//   grid2d:R:C           R x C five-point Laplacian
//   random:N:DENSITY:SEED  random SPD matrix
Problem load_problem(const std::string& spec);

// natural | mindeg | file:<path> (1-based old-to-new, one per line).
Permutation fill_order(const SymmetricSparseMatrix& a, const std::string& order);

struct RunConfig {
  Method method = Method::kRlb;
  std::string backend = "reference";
  std::string order = "mindeg";
  bool pr = true;
  double merge_cap = 12.5;
  Int repeats = 1;
  bool check = false;
};

AnalysisOptions analysis_options(const RunConfig& config);

struct RunOutcome {
  BenchRecord record;
  // Shared so the factor's pointer to its symbolic structure stays valid.
  std::shared_ptr<const PreparedProblem> prepared;
  std::optional<FactorResult> result;  // from the last repeat
};

// Order, analyse and factor `repeats` times; `--check` compares against the
// reference column factorization on the same structure. Throws StageError.
RunOutcome run_factor(const Problem& problem, const RunConfig& config);

// Same as run_factor after the analysis has been done once for the problem.
RunOutcome run_factor_prepared(const Problem& problem,
                               std::shared_ptr<const PreparedProblem> prepared,
                               const RunConfig& config);

// Order and analyse; throws StageError.
std::shared_ptr<const PreparedProblem> prepare_problem(const Problem& problem,
                                                       const RunConfig& config);

// Row for a run that failed before producing counters.
BenchRecord failed_record(const Problem& problem, const RunConfig& config,
                          const StageError& e);

}  // namespace spchol::bench

#endif  // SPCHOL_TOOLS_RUNNER_HPP_
