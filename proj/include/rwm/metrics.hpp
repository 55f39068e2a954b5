#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwm/matrix.hpp"

namespace rwm {

// Binary detection scores; higher means "more positive class" (label 1).
struct ScoreSet {
    std::vector<double> scores;
    std::vector<int> labels; // 0 or 1
};

enum class EerMode {
    midpoint_sweep,   // thresholds at distinct-score midpoints, (FAR+FRR)/2 at the
                      // point of smallest |FAR-FRR|
    roc_interpolation // linear interpolation between the adjacent ROC points
};

double eer(const ScoreSet& s, EerMode mode = EerMode::midpoint_sweep);

// Fraction of argmax(logits) == label; argmax ties go to the lowest class id.
double accuracy(const Matrix& logits, const std::vector<int>& labels);

// acc[j][k]: accuracy on task k's eval set after finishing training task j
// (0-based, k <= j).
struct AccuracyMatrix {
    std::vector<std::string> task_names;
    std::vector<std::vector<double>> acc;

    std::size_t trained_tasks() const { return acc.size(); }
    bool complete() const;
};

struct ForgettingReport {
    // f_k = max_{j>=k} acc[j][k] - acc[last][k]
    std::vector<double> per_task_forgetting;
    // mean over k < last of acc[last][k] - acc[k][k]
    double backward_transfer = 0.0;
    double final_mean_accuracy = 0.0;
};

ForgettingReport forgetting_report(const AccuracyMatrix& m);

// One evaluation record: model state after `after_task`, scored on
// `eval_task`'s eval set. Serialized as one JSON object per line.
struct EvalRecord {
    std::string method;
    std::uint64_t seed = 0;
    std::size_t after_task = 0; // 1-based
    std::size_t eval_task = 0;  // 1-based
    double accuracy = 0.0;
    std::optional<double> eer; // only for binary tasks
    std::size_t n_eval = 0;
};

std::string to_json_line(const EvalRecord& r);

} // namespace rwm
