#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rwm/matrix.hpp"

namespace rwm {

// Per-layer modification directions P_l plus the decaying regularizer.
// P_l lives in the input space of layer l and shrinks along every
// direction the training batches have visited.
struct ProjectorState {
    std::vector<Matrix> projectors; // one square matrix per layer
    double alpha = 0.0;
    double alpha_decay = 1.0;
    std::uint64_t update_count = 0;
};

// Orthogonal complements Q_l of the corresponding P_l column spaces.
struct ComplementSet {
    std::vector<Matrix> projectors;
    double ridge = 0.0;
};

// All projectors start as identities: before any update nothing is
// suppressed.
ProjectorState projector_init(const std::vector<std::size_t>& layer_input_dims,
                              double alpha0, double alpha_decay);

// One recursion step with the batch-mean input of layer `layer`:
//   k = P x / (alpha + x^T P x),  P <- P - k x^T P
void projector_update(ProjectorState& state, std::size_t layer,
                      std::span<const double> mean_input);

// Multiplies alpha by alpha_decay; call once per task boundary.
void decay_alpha(ProjectorState& state);

// Q = I - P (P^T P + ridge I)^{-1} P^T, the projector onto the orthogonal
// complement of P's column space. `ridge` is used as given.
Matrix complement(const Matrix& p, double ridge);

// Default trainer ridge: base scaled by trace(P^T P)/s so it tracks the
// magnitude of P (with a tiny absolute floor for fully annihilated P).
double scaled_ridge(const Matrix& p, double base_ridge);

ComplementSet complement_all(const ProjectorState& state, double base_ridge);

} // namespace rwm
