#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace rwm {

// Final-row accuracies of one finished run.
struct RunSummary {
    std::string method;
    std::uint64_t seed = 0;
    std::vector<std::string> task_names;
    std::vector<double> final_accuracy; // per eval task, after the last task
    std::vector<double> final_eer;      // NaN where not applicable
    double backward_transfer = 0.0;
    double mean_forgetting = 0.0; // mean over tasks of peak-minus-final accuracy
};

struct MethodAggregate {
    std::string method;
    std::vector<std::uint64_t> seeds;
    std::vector<double> mean_final_accuracy; // per eval task
    double mean_overall_accuracy = 0.0;
    double mean_backward_transfer = 0.0;
    double mean_forgetting = 0.0;
    std::vector<RunSummary> runs; // per-seed values, aggregation stays auditable
};

struct AggregateReport {
    std::vector<std::string> task_names;
    std::vector<MethodAggregate> methods;
};

// Scans `runs_dir` for {method}_{seed} run directories and averages the
// final accuracy row per method across seeds.
AggregateReport aggregate_runs(const std::filesystem::path& runs_dir);

std::string format_report(const AggregateReport& report);

} // namespace rwm
