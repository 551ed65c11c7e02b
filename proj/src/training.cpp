#include "logicnet/training.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "logicnet/rng.hpp"

namespace logicnet {

void TrainSpec::validate() const {
    if (topology.size() < 2) {
        throw std::invalid_argument("topology needs an input and an output width");
    }
    for (std::size_t width : topology) {
        if (width == 0) throw std::invalid_argument("topology widths must be positive");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw std::invalid_argument("learning rate must be positive and finite");
    }
    if (max_epochs == 0) throw std::invalid_argument("max_epochs must be positive");
    if (!(target_max_error > 0.0) || !(target_max_error < 1.0)) {
        throw std::invalid_argument("target_max_error must lie in (0, 1)");
    }
    if (!(init_scale > 0.0) || !std::isfinite(init_scale)) {
        throw std::invalid_argument("init_scale must be positive and finite");
    }
}

std::size_t Dataset::input_width() const {
    return inputs.empty() ? 0 : inputs.front().size();
}

std::size_t Dataset::target_width() const {
    return targets.empty() ? 0 : targets.front().size();
}

void Dataset::validate() const {
    if (inputs.empty()) throw std::invalid_argument("dataset is empty");
    if (inputs.size() != targets.size()) {
        throw std::invalid_argument("dataset has " + std::to_string(inputs.size()) +
                                    " inputs and " + std::to_string(targets.size()) +
                                    " targets");
    }
    const std::size_t in = input_width();
    const std::size_t out = target_width();
    if (in == 0 || out == 0) {
        throw std::invalid_argument("dataset rows must be non-empty");
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != in || targets[i].size() != out) {
            throw std::invalid_argument("dataset row " + std::to_string(i) +
                                        " has inconsistent width");
        }
        for (double x : inputs[i]) {
            if (!std::isfinite(x)) throw std::invalid_argument("non-finite input");
        }
        for (double t : targets[i]) {
            if (!std::isfinite(t)) throw std::invalid_argument("non-finite target");
        }
    }
}

Dataset Dataset::from_truth_table(const TruthTable& table) {
    Dataset data;
    data.inputs.reserve(table.rows());
    data.targets.reserve(table.rows());
    for (std::size_t row = 0; row < table.rows(); ++row) {
        std::vector<double> x;
        x.reserve(table.variables.size());
        for (std::uint8_t bit : table.row_bits(row)) {
            x.push_back(bit ? 1.0 : 0.0);
        }
        data.inputs.push_back(std::move(x));
        data.targets.push_back({table.outputs[row] ? 1.0 : 0.0});
    }
    return data;
}

namespace {

void check_shapes(const Network& net, const Dataset& data) {
    net.validate();
    data.validate();
    if (data.input_width() != net.inputs.size()) {
        throw std::invalid_argument("dataset input width " +
                                    std::to_string(data.input_width()) +
                                    " does not match network inputs " +
                                    std::to_string(net.inputs.size()));
    }
    if (data.target_width() != net.output_width()) {
        throw std::invalid_argument("dataset target width " +
                                    std::to_string(data.target_width()) +
                                    " does not match network outputs " +
                                    std::to_string(net.output_width()));
    }
}

}  // namespace

double loss(const Network& net, const Dataset& data) {
    check_shapes(net, data);
    double total = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Trace trace = forward(net, data.inputs[i]);
        const std::vector<double>& out = trace.output();
        for (std::size_t k = 0; k < out.size(); ++k) {
            const double diff = data.targets[i][k] - out[k];
            total += 0.5 * diff * diff;
        }
    }
    return total;
}

Gradient gradient(const Network& net, const Dataset& data) {
    check_shapes(net, data);
    for (const Layer& layer : net.layers) {
        if (layer.activation.kind != Activation::Kind::Sigmoid) {
            throw std::invalid_argument("gradient needs sigmoid layers throughout");
        }
    }

    Gradient grad;
    grad.weights.reserve(net.layers.size());
    grad.biases.reserve(net.layers.size());
    for (const Layer& layer : net.layers) {
        grad.weights.emplace_back(layer.weights.size(), 0.0);
        grad.biases.emplace_back(layer.biases.size(), 0.0);
    }

    const std::size_t depth = net.layers.size();
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Trace trace = forward(net, data.inputs[i]);

        // dL/dz for the layer being visited, starting at the output:
        // dL/da = (a - target), da/dz = a * (1 - a).
        std::vector<double> delta(net.output_width());
        const std::vector<double>& out = trace.activations.back();
        for (std::size_t k = 0; k < out.size(); ++k) {
            const double a = out[k];
            delta[k] = (a - data.targets[i][k]) * a * (1.0 - a);
        }

        for (std::size_t l = depth; l-- > 0;) {
            const Layer& layer = net.layers[l];
            const std::vector<double>& below =
                l == 0 ? data.inputs[i] : trace.activations[l - 1];
            for (std::size_t r = 0; r < layer.rows; ++r) {
                grad.biases[l][r] += delta[r];
                double* gw = grad.weights[l].data() + r * layer.cols;
                for (std::size_t c = 0; c < layer.cols; ++c) {
                    gw[c] += delta[r] * below[c];
                }
            }
            if (l == 0) break;
            std::vector<double> next(layer.cols, 0.0);
            for (std::size_t c = 0; c < layer.cols; ++c) {
                double acc = 0.0;
                for (std::size_t r = 0; r < layer.rows; ++r) {
                    acc += layer.weight_at(r, c) * delta[r];
                }
                const double a = below[c];
                next[c] = acc * a * (1.0 - a);
            }
            delta = std::move(next);
        }
    }
    return grad;
}

namespace {

Network random_network(const TrainSpec& spec) {
    DetRng rng(spec.seed);
    Network net;
    net.inputs.reserve(spec.topology.front());
    for (std::size_t i = 0; i < spec.topology.front(); ++i) {
        net.inputs.push_back("x" + std::to_string(i));
    }
    for (std::size_t l = 1; l < spec.topology.size(); ++l) {
        Layer layer;
        layer.rows = spec.topology[l];
        layer.cols = spec.topology[l - 1];
        layer.weights.reserve(layer.rows * layer.cols);
        for (std::size_t i = 0; i < layer.rows * layer.cols; ++i) {
            layer.weights.push_back(rng.uniform(-spec.init_scale, spec.init_scale));
        }
        layer.biases.reserve(layer.rows);
        for (std::size_t i = 0; i < layer.rows; ++i) {
            layer.biases.push_back(rng.uniform(-spec.init_scale, spec.init_scale));
        }
        net.layers.push_back(std::move(layer));
    }
    return net;
}

double worst_output_error(const Network& net, const Dataset& data) {
    double worst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Trace trace = forward(net, data.inputs[i]);
        const std::vector<double>& out = trace.output();
        for (std::size_t k = 0; k < out.size(); ++k) {
            worst = std::max(worst, std::abs(data.targets[i][k] - out[k]));
        }
    }
    return worst;
}

constexpr double kDivergenceCeiling = 1e6;

}  // namespace

TrainReport train_backprop(const TrainSpec& spec, const Dataset& data) {
    spec.validate();
    data.validate();
    if (data.input_width() != spec.topology.front()) {
        throw std::invalid_argument("dataset input width does not match topology");
    }
    if (data.target_width() != spec.topology.back()) {
        throw std::invalid_argument("dataset target width does not match topology");
    }

    TrainReport report;
    report.network = random_network(spec);
    report.rng = kRngName;
    report.loss_history.reserve(std::min<std::size_t>(spec.max_epochs, 4096));

    for (std::size_t epoch = 0; epoch < spec.max_epochs; ++epoch) {
        const Gradient grad = gradient(report.network, data);
        for (std::size_t l = 0; l < report.network.layers.size(); ++l) {
            Layer& layer = report.network.layers[l];
            for (std::size_t i = 0; i < layer.weights.size(); ++i) {
                layer.weights[i] -= spec.learning_rate * grad.weights[l][i];
            }
            for (std::size_t i = 0; i < layer.biases.size(); ++i) {
                layer.biases[i] -= spec.learning_rate * grad.biases[l][i];
            }
        }

        const double epoch_loss = loss(report.network, data);
        report.loss_history.push_back(epoch_loss);
        report.epochs_run = epoch + 1;
        report.final_loss = epoch_loss;

        if (!std::isfinite(epoch_loss) || epoch_loss > kDivergenceCeiling) {
            report.diverged = true;
            break;
        }
        report.max_output_error = worst_output_error(report.network, data);
        if (report.max_output_error < spec.target_max_error) {
            report.converged = true;
            break;
        }
    }
    return report;
}

std::string TrainReport::to_json() const {
    nlohmann::json j;
    j["epochs_run"] = epochs_run;
    j["final_loss"] = final_loss;
    j["max_output_error"] = max_output_error;
    j["converged"] = converged;
    j["diverged"] = diverged;
    j["rng"] = rng;
    j["network"] = nlohmann::json::parse(serialize(network));
    return j.dump(2);
}

std::string TrainReport::loss_history_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "epoch,loss\n";
    for (std::size_t i = 0; i < loss_history.size(); ++i) {
        out << (i + 1) << "," << loss_history[i] << "\n";
    }
    return out.str();
}

PerceptronReport train_perceptron(const Dataset& data, double rate,
                                  std::size_t max_epochs) {
    data.validate();
    if (data.target_width() != 1) {
        throw std::invalid_argument("perceptron training needs single-bit targets");
    }
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("learning rate must be positive and finite");
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (double x : data.inputs[i]) {
            if (x != 0.0 && x != 1.0) {
                throw std::invalid_argument("perceptron inputs must be 0/1");
            }
        }
        if (data.targets[i][0] != 0.0 && data.targets[i][0] != 1.0) {
            throw std::invalid_argument("perceptron targets must be 0/1");
        }
    }

    PerceptronReport report;
    report.weights.assign(data.input_width(), 0.0);

    const auto classify = [&](const std::vector<double>& x) {
        double z = report.bias;
        for (std::size_t c = 0; c < x.size(); ++c) z += report.weights[c] * x[c];
        return z >= 0.0 ? 1.0 : 0.0;
    };

    for (std::size_t epoch = 0; epoch < max_epochs; ++epoch) {
        std::size_t wrong = 0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const double y = classify(data.inputs[i]);
            const double t = data.targets[i][0];
            if (y == t) continue;
            ++wrong;
            const double step = rate * (t - y);
            for (std::size_t c = 0; c < report.weights.size(); ++c) {
                report.weights[c] += step * data.inputs[i][c];
            }
            report.bias += step;
        }
        report.epochs_run = epoch + 1;
        if (wrong == 0) {
            report.converged = true;
            break;
        }
    }

    report.misclassified = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (classify(data.inputs[i]) != data.targets[i][0]) ++report.misclassified;
    }
    return report;
}

Network PerceptronReport::as_network(std::vector<std::string> input_names) const {
    if (input_names.size() != weights.size()) {
        throw std::invalid_argument("input name count does not match weights");
    }
    Network net;
    net.inputs = std::move(input_names);
    Layer layer;
    layer.rows = 1;
    layer.cols = weights.size();
    layer.weights = weights;
    layer.biases = {bias};
    layer.activation = Activation::step_unit(0.0);
    net.layers.push_back(std::move(layer));
    net.validate();
    return net;
}

std::string PerceptronReport::to_json() const {
    nlohmann::json j;
    j["weights"] = weights;
    j["bias"] = bias;
    j["epochs_run"] = epochs_run;
    j["misclassified"] = misclassified;
    j["converged"] = converged;
    return j.dump(2);
}

}  // namespace logicnet
