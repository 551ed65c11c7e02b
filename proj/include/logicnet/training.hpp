#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logicnet/formula.hpp"
#include "logicnet/network.hpp"

namespace logicnet {

// Hyperparameters of one backpropagation run. Everything that can move a
// number is in here, seed included, so a spec reproduces its report
// bit for bit.
struct TrainSpec {
    std::vector<std::size_t> topology;  // layer widths, inputs first
    double learning_rate = 0.5;
    std::size_t max_epochs = 20000;
    double target_max_error = 0.4;  // in (0,1)
    std::uint64_t seed = 0;
    double init_scale = 2.0;

    void validate() const;
};

// Training examples. Inputs and targets are stored as doubles; truth-table
// and CSV construction produce 0/1 values, and real-valued targets are
// allowed. Duplicate inputs with contradictory targets make a guaranteed
// non-convergence probe: identical rows share one output, so one error
// stays at 0.5 or above forever.
struct Dataset {
    std::vector<std::vector<double>> inputs;
    std::vector<std::vector<double>> targets;

    std::size_t size() const { return inputs.size(); }
    std::size_t input_width() const;
    std::size_t target_width() const;
    void validate() const;  // uniform dimensions, nonempty

    static Dataset from_truth_table(const TruthTable& table);
};

// Same shape as the network's weights and biases, one entry per layer.
struct Gradient {
    std::vector<std::vector<double>> weights;  // row-major per layer
    std::vector<std::vector<double>> biases;
};

// Sum over examples of 1/2 * sum((target - output)^2).
double loss(const Network& net, const Dataset& data);

// Exact reverse-mode gradient of loss() through sigmoid layers, using
// sigmoid'(z) = a * (1 - a). Throws std::invalid_argument if any layer
// has a step activation.
Gradient gradient(const Network& net, const Dataset& data);

struct TrainReport {
    Network network;
    std::size_t epochs_run = 0;
    double final_loss = 0.0;
    double max_output_error = 0.0;  // per-example, per-output worst case
    bool converged = false;
    bool diverged = false;  // loss went non-finite or above 1e6
    std::string rng;        // generator recorded for reproducibility
    std::vector<double> loss_history;  // one entry per epoch run

    std::string to_json() const;
    std::string loss_history_csv() const;  // "epoch,loss" lines
};

// Full-batch gradient descent: w <- w - rate * grad until the worst
// per-example output error drops below spec.target_max_error or
// max_epochs is hit. Initial weights, then biases, of each layer are
// drawn uniformly from [-init_scale, +init_scale] using DetRng(seed)
// (mt19937_64 with the 53-bit mapping in rng.hpp). Identical specs give
// bit-identical reports.
TrainReport train_backprop(const TrainSpec& spec, const Dataset& data);

struct PerceptronReport {
    std::vector<double> weights;
    double bias = 0.0;
    std::size_t epochs_run = 0;
    std::size_t misclassified = 0;  // against the final weights
    bool converged = false;

    Network as_network(std::vector<std::string> input_names) const;
    std::string to_json() const;
};

// Classical error-correction rule on one hard-threshold unit that fires
// at w.x + b >= 0. Weights start at zero; each misclassified example, in
// dataset order, adds rate * (target - output) * input to w (and to b
// with input 1). Stops after a sweep with no misclassification.
// Targets must be single bits and inputs 0/1.
PerceptronReport train_perceptron(const Dataset& data, double rate,
                                  std::size_t max_epochs);

}  // namespace logicnet
