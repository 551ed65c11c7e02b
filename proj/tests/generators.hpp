// Seeded generators and oracles shared by the unit and acceptance suites.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "logicnet/formula.hpp"
#include "logicnet/network.hpp"
#include "logicnet/rng.hpp"
#include "logicnet/training.hpp"

namespace testgen {

// All Not/And/Or/Implies trees over `names` up to the given height:
// F(0) = variables, F(h) = variables + Not over F(h-1) + the three binary
// connectives over F(h-1) pairs. Levels below the top are materialized
// (they stay small); the top level streams through `fn` one formula at a
// time. Counts over two names: 2, 16, 786, 1854176 for heights 0..3.
template <typename Fn>
void enumerate_formulas(int max_height, const std::vector<std::string>& names,
                        Fn&& fn) {
    std::vector<logicnet::Formula> leaves;
    leaves.reserve(names.size());
    for (const auto& name : names) leaves.push_back(logicnet::var(name));
    if (max_height == 0) {
        for (const auto& f : leaves) fn(f);
        return;
    }
    std::vector<logicnet::Formula> below = leaves;
    for (int h = 1; h < max_height; ++h) {
        std::vector<logicnet::Formula> next = leaves;
        for (const auto& f : below) next.push_back(logicnet::neg(f));
        for (const auto& a : below) {
            for (const auto& b : below) {
                next.push_back(logicnet::conj(a, b));
                next.push_back(logicnet::disj(a, b));
                next.push_back(logicnet::implies(a, b));
            }
        }
        below = std::move(next);
    }
    for (const auto& f : leaves) fn(f);
    for (const auto& f : below) fn(logicnet::neg(f));
    for (const auto& a : below) {
        for (const auto& b : below) {
            fn(logicnet::conj(a, b));
            fn(logicnet::disj(a, b));
            fn(logicnet::implies(a, b));
        }
    }
}

inline logicnet::Formula random_formula(logicnet::DetRng& rng, int max_depth,
                                        const std::vector<std::string>& names,
                                        bool allow_possibly = true) {
    if (max_depth == 0 || rng.below(4) == 0) {
        return logicnet::var(names[rng.below(names.size())]);
    }
    switch (rng.below(allow_possibly ? 5 : 4)) {
        case 0:
            return logicnet::neg(random_formula(rng, max_depth - 1, names,
                                                allow_possibly));
        case 1:
            return logicnet::conj(
                random_formula(rng, max_depth - 1, names, allow_possibly),
                random_formula(rng, max_depth - 1, names, allow_possibly));
        case 2:
            return logicnet::disj(
                random_formula(rng, max_depth - 1, names, allow_possibly),
                random_formula(rng, max_depth - 1, names, allow_possibly));
        case 3:
            return logicnet::implies(
                random_formula(rng, max_depth - 1, names, allow_possibly),
                random_formula(rng, max_depth - 1, names, allow_possibly));
        default:
            return logicnet::possibly(
                random_formula(rng, max_depth - 1, names, allow_possibly));
    }
}

inline logicnet::Network random_network(logicnet::DetRng& rng,
                                        const std::vector<std::size_t>& topology,
                                        double scale) {
    logicnet::Network net;
    for (std::size_t i = 0; i < topology.front(); ++i) {
        net.inputs.push_back("x" + std::to_string(i));
    }
    for (std::size_t l = 1; l < topology.size(); ++l) {
        logicnet::Layer layer;
        layer.rows = topology[l];
        layer.cols = topology[l - 1];
        for (std::size_t i = 0; i < layer.rows * layer.cols; ++i) {
            layer.weights.push_back(rng.uniform(-scale, scale));
        }
        for (std::size_t i = 0; i < layer.rows; ++i) {
            layer.biases.push_back(rng.uniform(-scale, scale));
        }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

inline logicnet::Dataset random_dataset(logicnet::DetRng& rng, std::size_t rows,
                                        std::size_t input_width,
                                        std::size_t target_width) {
    logicnet::Dataset data;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<double> x(input_width), t(target_width);
        for (double& v : x) v = rng.unit();
        for (double& v : t) v = rng.unit();
        data.inputs.push_back(std::move(x));
        data.targets.push_back(std::move(t));
    }
    return data;
}

// Central differences on every weight and bias.
inline logicnet::Gradient finite_difference_gradient(const logicnet::Network& net,
                                                     const logicnet::Dataset& data,
                                                     double eps) {
    logicnet::Network work = net;
    logicnet::Gradient grad;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        grad.weights.emplace_back(net.layers[l].weights.size(), 0.0);
        grad.biases.emplace_back(net.layers[l].biases.size(), 0.0);
        for (std::size_t i = 0; i < net.layers[l].weights.size(); ++i) {
            work.layers[l].weights[i] = net.layers[l].weights[i] + eps;
            const double up = logicnet::loss(work, data);
            work.layers[l].weights[i] = net.layers[l].weights[i] - eps;
            const double down = logicnet::loss(work, data);
            work.layers[l].weights[i] = net.layers[l].weights[i];
            grad.weights[l][i] = (up - down) / (2.0 * eps);
        }
        for (std::size_t i = 0; i < net.layers[l].biases.size(); ++i) {
            work.layers[l].biases[i] = net.layers[l].biases[i] + eps;
            const double up = logicnet::loss(work, data);
            work.layers[l].biases[i] = net.layers[l].biases[i] - eps;
            const double down = logicnet::loss(work, data);
            work.layers[l].biases[i] = net.layers[l].biases[i];
            grad.biases[l][i] = (up - down) / (2.0 * eps);
        }
    }
    return grad;
}

// ||a - b|| / max(||a||, ||b||, floor) over all components.
inline double gradient_relative_error(const logicnet::Gradient& a,
                                      const logicnet::Gradient& b) {
    double diff = 0.0, na = 0.0, nb = 0.0;
    const auto accumulate = [&](const std::vector<std::vector<double>>& xs,
                                const std::vector<std::vector<double>>& ys) {
        for (std::size_t l = 0; l < xs.size(); ++l) {
            for (std::size_t i = 0; i < xs[l].size(); ++i) {
                const double d = xs[l][i] - ys[l][i];
                diff += d * d;
                na += xs[l][i] * xs[l][i];
                nb += ys[l][i] * ys[l][i];
            }
        }
    };
    accumulate(a.weights, b.weights);
    accumulate(a.biases, b.biases);
    return std::sqrt(diff) /
           std::max({std::sqrt(na), std::sqrt(nb), 1e-12});
}

}  // namespace testgen
