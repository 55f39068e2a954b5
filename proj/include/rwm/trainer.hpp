#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rwm/dataset.hpp"
#include "rwm/net.hpp"
#include "rwm/projector.hpp"
#include "rwm/regroup.hpp"

namespace rwm {

enum class Method { rwm, owm, finetune, replay_all };

Method method_from_string(const std::string& name);
const char* to_string(Method m);

enum class ProjectorWarmup { all_tasks, skip_first };

ProjectorWarmup warmup_from_string(const std::string& name);
const char* to_string(ProjectorWarmup w);

struct TrainConfig {
    Method method = Method::rwm;
    double learning_rate = 0.05;
    std::size_t epochs = 5;
    std::size_t batch_size = 16;
    double theta_min = 1e-3;
    double ridge = 1e-8;
    ProjectorWarmup warmup = ProjectorWarmup::all_tasks;
    std::uint64_t shuffle_seed = 0;
    // Test hooks: pin the blend angle, or replace the modification
    // direction with the identity.
    std::optional<double> force_final_radian;
    bool force_identity_direction = false;

    void validate() const;
};

struct BatchLogRecord {
    std::size_t task = 0;  // 1-based
    std::size_t batch = 0; // 1-based, cumulative across epochs within the task
    double loss = 0.0;
    std::optional<double> theta_f;
    std::optional<double> sum_theta_s;
    std::optional<double> sum_theta_d;
    std::vector<double> p_norms; // |P_l|_F after this batch; empty for plain BP
};

std::string to_json_line(const BatchLogRecord& r);

// `update_directions` points at the per-layer weight deltas (before the
// learning-rate scale) actually applied this batch.
struct BatchObservation {
    const BatchLogRecord* record = nullptr;
    const std::vector<Matrix>* update_directions = nullptr;
};
using BatchObserver = std::function<void(const BatchObservation&)>;

// Per-layer modification directions R_l and the modified gradients
// G_l = R_l * grad_l, plus the step metadata.
struct UpdatePlan {
    std::vector<Matrix> directions;
    std::vector<Matrix> modified_grads;
    double learning_rate = 0.0;
    std::size_t task_index = 1; // 1-based
    std::size_t batch_index = 1;
};

UpdatePlan plain_update_plan(double learning_rate, std::size_t task_index,
                             std::size_t batch_index);
UpdatePlan make_update_plan(std::vector<Matrix> directions, const GradientSet& grads,
                            double learning_rate, std::size_t task_index,
                            std::size_t batch_index);

// Weight update. Task 1 (or an empty plan) applies the raw gradients;
// later tasks apply the modified ones. Biases and the attention head are
// always plain gradient steps.
void apply_update(Network& net, const GradientSet& grads, const UpdatePlan& plan);

struct TaskTrainLog {
    std::vector<BatchLogRecord> batches;
};

// Runs `config.epochs` passes over `task`. Per batch: forward, radians,
// complements, modification directions, backward, weight update, then the
// projector recursion with this batch's layer-input means. Decays alpha at
// the end of the task.
TaskTrainLog train_task(Network& net, ProjectorState& projector, const ClassGroups& groups,
                        const TaskDataset& task, std::size_t task_index,
                        const TrainConfig& config, const BatchObserver& observer = {});

} // namespace rwm
