#ifndef QUANTFAM_SIMSTUDY_HPP_
#define QUANTFAM_SIMSTUDY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantfam/estimators.hpp"

// Monte Carlo estimator comparison: seeded replicated sampling, fitting by
// the selected methods, and per-cell Mean/SD/MSE plus timing summaries.

namespace quantfam {

struct StudyConfig {
    FamilySpec true_spec;
    std::vector<int> sample_sizes;
    int replicates = 0;
    std::vector<FitMethod> methods;
    std::uint64_t master_seed = 0;
    int parallelism = 1;
    OptimizerSettings optimizer;
};

struct ParameterStat {
    std::string name;
    double truth = 0.0;
    double mean = 0.0;
    std::optional<double> sd;  // undefined for a single successful replicate
    double mse = 0.0;
};

struct CellSummary {
    FitMethod method = FitMethod::MoLM;
    int n = 0;
    int successes = 0;
    int failures = 0;
    std::vector<ParameterStat> parameters;
    // wall-time stats are reproducibility-exempt: they never enter the
    // canonical serializations
    double time_mean_s = 0.0;
    std::optional<double> time_sd_s;
};

struct StudySummary {
    FamilySpec true_spec;
    int replicates = 0;
    std::uint64_t master_seed = 0;
    std::vector<CellSummary> cells;
};

/// One (replicate, n, method) cell evaluation: derives the replicate seed
/// from the master seed and the cell coordinates, samples, fits and stamps
/// the wall time. Deterministic regardless of execution order.
FitResult run_replicate(int rep_index, int n, FitMethod method, const FamilySpec& true_spec,
                        std::uint64_t master_seed, const OptimizerSettings& settings = {});

/// Executes every cell (parallel across replicates when
/// config.parallelism > 1) and aggregates. The summary is identical for
/// any parallelism level.
StudySummary run_study(const StudyConfig& config);

/// Parse/serialize the study config as JSON.
StudyConfig study_config_from_json(const std::string& json_text);

/// Canonical outputs: full-precision, deterministic, no timing block.
std::string summary_csv(const StudySummary& summary);
std::string summary_json(const StudySummary& summary);

/// Auxiliary timing table (non-canonical; varies run to run).
std::string timing_csv(const StudySummary& summary);

/// Rendered presentation table with the timing block, values rounded
/// half-even to 3 decimals. format is "csv" or "markdown".
std::string render_table(const StudySummary& summary, const std::string& format);

}  // namespace quantfam

#endif  // QUANTFAM_SIMSTUDY_HPP_
