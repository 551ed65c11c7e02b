#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace logicnet {

double sigmoid(double x);  // 1 / (1 + e^(-x))

// Elementwise activation: sigmoid, or a hard threshold that fires at
// pre-activations >= threshold.
struct Activation {
    enum class Kind { Sigmoid, Step };

    Kind kind = Kind::Sigmoid;
    double threshold = 0.0;  // Step only

    static Activation sigmoid_unit() { return {Kind::Sigmoid, 0.0}; }
    static Activation step_unit(double threshold) {
        return {Kind::Step, threshold};
    }

    double operator()(double z) const;

    bool operator==(const Activation&) const = default;
};

// One dense layer: `rows` neurons fed by `cols` values of the previous
// layer. Weights are row-major; biases has one entry per neuron.
struct Layer {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> weights;
    std::vector<double> biases;
    Activation activation;

    double weight_at(std::size_t r, std::size_t c) const {
        return weights[r * cols + c];
    }
    double& weight_at(std::size_t r, std::size_t c) {
        return weights[r * cols + c];
    }

    bool operator==(const Layer&) const = default;
};

// Layered dense feedforward network. Immutable by convention once built;
// forward() never mutates, so one network can be evaluated from many
// threads at once.
struct Network {
    std::vector<std::string> inputs;  // ordered input names
    std::vector<Layer> layers;

    std::size_t depth() const { return layers.size(); }
    std::size_t output_width() const {
        return layers.empty() ? 0 : layers.back().rows;
    }

    // Throws std::invalid_argument on any dimension inconsistency:
    // no layers, weights/biases size mismatches, or adjacent layers that
    // do not chain.
    void validate() const;

    bool operator==(const Network&) const = default;
};

// Every intermediate vector of one forward pass, layer by layer.
struct Trace {
    std::vector<std::vector<double>> pre_activations;
    std::vector<std::vector<double>> activations;

    const std::vector<double>& output() const { return activations.back(); }
};

// z = W * previous + b per layer, activation applied elementwise.
// Throws std::invalid_argument on a dimension mismatch or a non-finite
// input entry.
Trace forward(const Network& net, std::span<const double> input);

std::vector<std::uint8_t> binarize(std::span<const double> outputs,
                                   double cut = 0.5);
std::vector<std::uint8_t> binarize(const Trace& t, double cut = 0.5);

// Network document format (JSON): {"inputs": [names...], "layers":
// [{"weights": [[row]...], "biases": [...], "activation":
// {"kind": "sigmoid"} | {"kind": "step", "threshold": x}}...]}.
// Numbers survive the round trip bit-exactly.
std::string serialize(const Network& net);
Network deserialize_network(const std::string& document);

}  // namespace logicnet
