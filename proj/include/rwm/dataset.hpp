#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rwm/matrix.hpp"

namespace rwm {

struct TaskDataset {
    std::string name;
    Matrix features; // n x s
    std::vector<int> labels;
    std::string split; // "train", "eval" or "" when not split yet

    std::size_t sample_count() const { return features.rows(); }
    std::size_t feature_dim() const { return features.cols(); }
    // max label + 1
    std::size_t class_count() const;
    void validate() const;
};

// Gaussian cluster stream: compact classes keep one mean across tasks,
// dispersed classes drift by `mean_shift` per task step.
struct SyntheticSpec {
    std::size_t feature_dim = 16;
    std::size_t class_count = 2;
    std::vector<int> compact_classes = {0}; // the rest are dispersed
    double sigma_compact = 0.3;
    double sigma_dispersed = 0.6;
    double mean_shift = 3.0;
    double mean_radius = 2.0; // norm of each class's base mean
    std::size_t samples_per_class = 2000;
    std::size_t task_count = 2;
    std::uint64_t seed = 1;
    double split_fraction = 0.7;
    // When set (default), sigma_compact must be strictly below
    // sigma_dispersed so the generated compactness ordering matches the
    // class roles.
    bool enforce_spread_ordering = true;

    void validate() const;
};

std::vector<std::pair<TaskDataset, TaskDataset>> generate_sequence(const SyntheticSpec& spec);

enum class FeatureFileFormat { auto_detect, csv, binary };

// CSV ("label,f0,...,f{s-1}" with header) or binary ("RWMF" container).
TaskDataset load_features(const std::filesystem::path& path,
                          FeatureFileFormat format = FeatureFileFormat::auto_detect);
void save_features_csv(const std::filesystem::path& path, const TaskDataset& dataset);
void save_features_binary(const std::filesystem::path& path, const TaskDataset& dataset);

// Per-class stratified shuffle split; train gets round(fraction * N_r) of
// every class, clamped so both sides stay non-empty.
std::pair<TaskDataset, TaskDataset> split(const TaskDataset& dataset, double train_fraction,
                                          std::uint64_t seed);

// Stacks datasets row-wise (same feature dim required); used by replay.
TaskDataset concatenate(const std::vector<TaskDataset>& parts, const std::string& name);

} // namespace rwm
