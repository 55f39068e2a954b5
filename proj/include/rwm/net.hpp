#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rwm/matrix.hpp"

namespace rwm {

enum class Activation { identity, relu, tanh };

Activation activation_from_string(const std::string& name);
const char* to_string(Activation a);

// One dense layer. Weights are fan_in x fan_out so a batch row maps as
// y = x * W + bias.
struct Layer {
    Matrix weights;
    std::vector<double> bias;
    Activation activation = Activation::identity;

    std::size_t fan_in() const { return weights.rows(); }
    std::size_t fan_out() const { return weights.cols(); }
};

// Linear map from the pre-classifier hidden state to one score per sample.
struct AttentionHead {
    std::vector<double> weights;
    double bias = 0.0;
};

// Feed-forward classifier. Hidden layers share one activation; the output
// layer is linear so the final activations are logits.
class Network {
public:
    Network() = default;
    // dims = {input, hidden..., classes}; needs at least {input, classes}.
    Network(const std::vector<std::size_t>& dims, Activation hidden_activation,
            std::uint64_t seed);
    // Rebuild from explicit parts (checkpoint loading); validates chaining.
    static Network from_parts(std::vector<Layer> layers, AttentionHead attention);

    std::size_t layer_count() const { return layers_.size(); }
    std::size_t input_dim() const { return layers_.front().fan_in(); }
    std::size_t class_count() const { return layers_.back().fan_out(); }
    // Input dimension of the classifier output layer; this is what the
    // attention head reads.
    std::size_t hidden_dim() const { return layers_.back().fan_in(); }
    // Input dimension of layer l (the space its projector lives in).
    std::vector<std::size_t> layer_input_dims() const;

    Layer& layer(std::size_t l) { return layers_[l]; }
    const Layer& layer(std::size_t l) const { return layers_[l]; }
    AttentionHead& attention() { return attention_; }
    const AttentionHead& attention() const { return attention_; }

    bool operator==(const Network& other) const;

private:
    std::vector<Layer> layers_;
    AttentionHead attention_;
};

struct ForwardTrace {
    // layer_inputs[l] = batch that entered layer l (so layer_inputs[0] is
    // the raw input batch and layer_inputs[L] the pre-classifier hidden
    // state). One more entry than there are hidden layers.
    std::vector<Matrix> layer_inputs;
    // Column means of layer_inputs[l]; feeds the projector recursion.
    std::vector<std::vector<double>> input_means;
    Matrix logits;
    std::vector<double> attention_scores; // raw, pre-normalization
    std::size_t batch_size = 0;

    const Matrix& hidden() const { return layer_inputs.back(); }
};

struct GradientSet {
    // Descent directions: already negated, so weights += rate * grad
    // decreases the loss.
    std::vector<Matrix> weight_grads;
    std::vector<std::vector<double>> bias_grads;
    std::vector<double> attention_grad;
    double attention_bias_grad = 0.0;
};

ForwardTrace forward(const Network& net, const Matrix& batch);
double cross_entropy(const Matrix& logits, const std::vector<int>& labels);
GradientSet backward(const Network& net, const Matrix& batch,
                     const std::vector<int>& labels, const ForwardTrace& trace);

} // namespace rwm
