#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rwm/matrix.hpp"

namespace rwm {

// How in-class pairwise distances are averaged.
enum class PairCounting {
    ordered_with_self, // divide by N^2; self pairs count as zero distance
    unordered_strict   // divide by N(N-1)/2 over distinct unordered pairs
};

PairCounting pair_counting_from_string(const std::string& name);
const char* to_string(PairCounting pc);

// Mean in-class cosine distance per class. Low = the class looks the same
// wherever it shows up.
struct CompactnessTable {
    std::vector<double> distances;    // d_r, indexed by class id
    std::vector<std::size_t> counts;  // N_r
    std::size_t class_count() const { return distances.size(); }
};

// Classes split at rank `split_rank` into a compact group and a dispersed
// group after sorting by compactness.
struct ClassGroups {
    std::size_t split_rank = 0;
    std::vector<int> compact;   // ascending class ids
    std::vector<int> dispersed; // ascending class ids

    bool is_compact(int class_id) const;
    std::size_t class_count() const { return compact.size() + dispersed.size(); }
};

// 1 - x.y / (|x| |y|), clamped into [0, 2]. Zero-norm input is an error.
double cosine_distance(std::span<const double> x, std::span<const double> y);

CompactnessTable class_compactness(const Matrix& features, const std::vector<int>& labels,
                                   std::size_t class_count,
                                   PairCounting counting = PairCounting::ordered_with_self);

// Sort ascending by d_r (ties by class id); first split_rank ids become the
// compact group.
ClassGroups regroup(const CompactnessTable& table, std::size_t split_rank);

// "class_name,d_r" CSV presets (header row required).
struct NamedCompactness {
    std::vector<std::string> names;
    std::vector<double> distances;

    CompactnessTable table() const;
    // Names of the classes regroup() puts in the compact group.
    std::vector<std::string> compact_names(std::size_t split_rank) const;
};

NamedCompactness load_compactness_csv(const std::filesystem::path& path);
void write_compactness_csv(const std::filesystem::path& path, const NamedCompactness& table);

} // namespace rwm
