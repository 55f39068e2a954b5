#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rwm/config.hpp"
#include "rwm/metrics.hpp"

namespace rwm {

// Everything one (method, seed) run leaves behind. The directory holds
// config.resolved, checkpoint.rwmc, batch_log.ndjson, accuracy_matrix.json
// and eval_report.ndjson; nothing in them depends on wall-clock time.
struct RunArtifacts {
    std::filesystem::path dir;
    AccuracyMatrix matrix;
    std::vector<EvalRecord> records;
};

RunArtifacts run_experiment(const ExperimentConfig& config, Method method,
                            std::uint64_t seed);

// Runs every method x seed combination under config.out_dir/{method}_{seed}.
// Parallelism across runs is capped by the RWM_THREADS env var.
std::vector<RunArtifacts> run_grid(const ExperimentConfig& config);

} // namespace rwm
