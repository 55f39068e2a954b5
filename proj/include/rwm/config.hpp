#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rwm/dataset.hpp"
#include "rwm/net.hpp"
#include "rwm/regroup.hpp"
#include "rwm/trainer.hpp"

namespace rwm {

enum class DataSource { synthetic, files };

// Flat "key = value" experiment configuration. Unknown or duplicate keys
// are hard errors; every field except data.source has a default.
struct ExperimentConfig {
    std::vector<Method> methods = {Method::rwm};
    std::vector<std::uint64_t> seeds = {1};
    std::string out_dir = "runs";
    std::string kernel_backend = "auto"; // auto | scalar | avx2

    std::vector<std::size_t> hidden_dims = {32};
    Activation activation = Activation::relu;

    double learning_rate = 0.05;
    std::size_t epochs = 5;
    std::size_t batch_size = 16;

    double alpha0 = 0.1;
    double alpha_decay = 1.0;
    double ridge = 1e-8;
    double theta_min = 1e-3;
    std::size_t split_rank = 1;
    PairCounting pair_counting = PairCounting::ordered_with_self;
    ProjectorWarmup projector_warmup = ProjectorWarmup::all_tasks;
    std::string compactness_csv;                 // optional preset table
    std::vector<std::string> compactness_files;  // optional extra features

    std::optional<DataSource> data_source; // required
    std::vector<std::string> train_files;
    std::vector<std::string> eval_files;
    double files_split_fraction = 0.7;

    SyntheticSpec synthetic;                    // split_fraction/seed handled below
    std::optional<std::uint64_t> synthetic_seed; // empty = derive from run seed

    static ExperimentConfig from_file(const std::filesystem::path& path);
    // Same parser over in-memory text (used for config.resolved round-trips).
    static ExperimentConfig from_string(const std::string& text, const std::string& origin);

    // Checks everything a `run` needs (data source present, files counted,
    // value ranges).
    void validate_for_run() const;
    // Synthetic block only (gen-data path).
    void validate_synthetic() const;

    // Canonical echo of every field, with the per-run method/seed and the
    // resolved backend substituted in. Parses back with from_string.
    std::string resolved_echo(Method method, std::uint64_t seed,
                              std::uint64_t resolved_synthetic_seed,
                              const std::string& backend) const;
};

DataSource data_source_from_string(const std::string& name);
const char* to_string(DataSource s);

} // namespace rwm
