#pragma once

#include <span>
#include <vector>

#include "rwm/matrix.hpp"
#include "rwm/regroup.hpp"

namespace rwm {

// Everything derived from one batch's attention scores: the normalized
// weights, the per-sample rotation radians, the group sums and the final
// blend angle. theta_f = 0 means "modify along P only" (maximal
// protection), theta_f = pi/2 means "along Q only" (plain descent).
struct RadianBatch {
    std::vector<double> raw_scores;
    std::vector<double> normalized;   // softmax over the batch, sums to 1
    std::vector<double> radians;      // arcsin of the normalized scores
    double sum_compact = 0.0;         // over samples in the compact group
    double sum_dispersed = 0.0;       // over samples in the dispersed group
    double final_radian = 0.0;        // clamped into [theta_min, pi/2 - theta_min]
    double complement_gain = 0.0;     // tan(final_radian)
};

// Softmax over the batch dimension, log-sum-exp stabilized.
std::vector<double> normalize_scores(std::span<const double> raw);

// arcsin of each normalized score; inputs must lie in [0, 1].
std::vector<double> lrr(std::span<const double> normalized);

struct FinalLrr {
    double sum_compact = 0.0;
    double sum_dispersed = 0.0;
    double value = 0.0; // clamped
};

// pi/4 + (sum_compact - sum_dispersed)/2, clamped into
// [theta_min, pi/2 - theta_min] so the tangent stays finite.
FinalLrr final_lrr(std::span<const double> radians, std::span<const int> labels,
                   const ClassGroups& groups, double theta_min);

// R = |P| (P/|P| + tan(theta_f) Q/|Q|), Frobenius norms. The Q term is
// dropped when |Q| is negligible; |P| = 0 is an error (nothing left to
// modify along).
Matrix modification_direction(const Matrix& p, const Matrix& q, double theta_f);

RadianBatch compute_radian_batch(std::span<const double> raw_scores,
                                 std::span<const int> labels, const ClassGroups& groups,
                                 double theta_min);

} // namespace rwm
