#include "logicnet/network.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace logicnet {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double Activation::operator()(double z) const {
    switch (kind) {
        case Kind::Sigmoid:
            return sigmoid(z);
        case Kind::Step:
            return z >= threshold ? 1.0 : 0.0;
    }
    throw std::logic_error("unreachable");
}

void Network::validate() const {
    if (layers.empty()) {
        throw std::invalid_argument("network has no layers");
    }
    std::size_t prev = inputs.size();
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const Layer& layer = layers[l];
        const std::string where = "layer " + std::to_string(l);
        if (layer.rows == 0) {
            throw std::invalid_argument(where + " has no neurons");
        }
        if (layer.cols != prev) {
            throw std::invalid_argument(
                where + " expects " + std::to_string(layer.cols) +
                " inputs but the previous width is " + std::to_string(prev));
        }
        if (layer.weights.size() != layer.rows * layer.cols) {
            throw std::invalid_argument(where + " weight count " +
                                        std::to_string(layer.weights.size()) +
                                        " does not match " +
                                        std::to_string(layer.rows) + "x" +
                                        std::to_string(layer.cols));
        }
        if (layer.biases.size() != layer.rows) {
            throw std::invalid_argument(
                where + " has " + std::to_string(layer.biases.size()) +
                " biases for " + std::to_string(layer.rows) + " neurons");
        }
        prev = layer.rows;
    }
}

Trace forward(const Network& net, std::span<const double> input) {
    net.validate();
    if (input.size() != net.inputs.size()) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.size()) + " entries, network takes " +
            std::to_string(net.inputs.size()));
    }
    for (double x : input) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("input entries must be finite");
        }
    }

    Trace trace;
    trace.pre_activations.reserve(net.layers.size());
    trace.activations.reserve(net.layers.size());

    std::vector<double> current(input.begin(), input.end());
    for (const Layer& layer : net.layers) {
        std::vector<double> z(layer.rows);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            double acc = layer.biases[r];
            const double* w = layer.weights.data() + r * layer.cols;
            for (std::size_t c = 0; c < layer.cols; ++c) {
                acc += w[c] * current[c];
            }
            z[r] = acc;
        }
        std::vector<double> a(layer.rows);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            a[r] = layer.activation(z[r]);
        }
        trace.pre_activations.push_back(std::move(z));
        current = a;
        trace.activations.push_back(std::move(a));
    }
    return trace;
}

std::vector<std::uint8_t> binarize(std::span<const double> outputs, double cut) {
    std::vector<std::uint8_t> bits(outputs.size());
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        bits[i] = outputs[i] >= cut ? 1 : 0;
    }
    return bits;
}

std::vector<std::uint8_t> binarize(const Trace& t, double cut) {
    return binarize(std::span<const double>(t.output()), cut);
}

namespace {

nlohmann::json activation_to_json(const Activation& act) {
    if (act.kind == Activation::Kind::Sigmoid) {
        return {{"kind", "sigmoid"}};
    }
    return {{"kind", "step"}, {"threshold", act.threshold}};
}

Activation activation_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sigmoid") return Activation::sigmoid_unit();
    if (kind == "step") {
        return Activation::step_unit(j.at("threshold").get<double>());
    }
    throw std::invalid_argument("unknown activation kind '" + kind + "'");
}

}  // namespace

std::string serialize(const Network& net) {
    net.validate();
    nlohmann::json j;
    j["inputs"] = net.inputs;
    j["layers"] = nlohmann::json::array();
    for (const Layer& layer : net.layers) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < layer.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < layer.cols; ++c) {
                row.push_back(layer.weight_at(r, c));
            }
            rows.push_back(std::move(row));
        }
        j["layers"].push_back({{"weights", std::move(rows)},
                               {"biases", layer.biases},
                               {"activation", activation_to_json(layer.activation)}});
    }
    return j.dump(2);
}

Network deserialize_network(const std::string& document) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed network document: ") +
                                    e.what());
    }

    Network net;
    try {
        net.inputs = j.at("inputs").get<std::vector<std::string>>();
        std::size_t prev = net.inputs.size();
        for (const auto& jl : j.at("layers")) {
            Layer layer;
            const auto& rows = jl.at("weights");
            layer.rows = rows.size();
            layer.cols = prev;
            for (const auto& row : rows) {
                if (row.size() != prev) {
                    throw std::invalid_argument(
                        "weight row width " + std::to_string(row.size()) +
                        " does not match previous layer width " +
                        std::to_string(prev));
                }
                for (const auto& w : row) {
                    layer.weights.push_back(w.get<double>());
                }
            }
            layer.biases = jl.at("biases").get<std::vector<double>>();
            layer.activation = activation_from_json(jl.at("activation"));
            prev = layer.rows;
            net.layers.push_back(std::move(layer));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed network document: ") +
                                    e.what());
    }
    net.validate();
    return net;
}

}  // namespace logicnet
