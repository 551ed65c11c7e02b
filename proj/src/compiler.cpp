#include "logicnet/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace logicnet {

namespace gate {

Gate not_gate() { return Gate{kNotBias, {kNotWeight}}; }

Gate pass_gate() { return Gate{kPassBias, {kPassWeight}}; }

Gate or_gate(std::size_t fan_in) {
    if (fan_in == 0) throw std::invalid_argument("or gate needs inputs");
    return Gate{kOrBias, std::vector<double>(fan_in, kFanWeight)};
}

Gate and_gate(std::size_t fan_in) {
    if (fan_in == 0) throw std::invalid_argument("and gate needs inputs");
    return Gate{and_bias(fan_in), std::vector<double>(fan_in, kFanWeight)};
}

}  // namespace gate

namespace {

// A value flowing through the compiled network: layer 0 is the input
// vector, layer k >= 1 is neuron `index` of that layer.
struct Signal {
    std::size_t layer;
    std::size_t index;
};

class Builder {
public:
    explicit Builder(std::vector<std::string> inputs) : inputs_(std::move(inputs)) {
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            input_index_[inputs_[i]] = i;
        }
    }

    Signal lower(const Formula& f) {
        switch (f.kind()) {
            case Kind::Var:
                return {0, input_index_.at(f.var_name())};
            case Kind::Not: {
                Signal s = lower(f.child());
                return add(s.layer + 1, gate::kNotBias, {{s.index, gate::kNotWeight}});
            }
            case Kind::And:
            case Kind::Or: {
                Signal a = lower(f.left());
                Signal b = lower(f.right());
                const std::size_t level = std::max(a.layer, b.layer);
                a = lift(a, level);
                b = lift(b, level);
                const double bias =
                    f.kind() == Kind::Or ? gate::kOrBias : gate::and_bias(2);
                return add(level + 1, bias,
                           {{a.index, gate::kFanWeight}, {b.index, gate::kFanWeight}});
            }
            case Kind::Implies:
            case Kind::Possibly:
                break;
        }
        throw std::logic_error("lower() called before rewriting");
    }

    // Extend a signal upward with PASS neurons until it lives at `layer`.
    // Lifts of the same signal share one chain.
    Signal lift(Signal s, std::size_t layer) {
        while (s.layer < layer) {
            auto [it, fresh] = pass_memo_.try_emplace({s.layer, s.index});
            if (fresh) {
                it->second =
                    add(s.layer + 1, gate::kPassBias, {{s.index, gate::kPassWeight}})
                        .index;
            }
            s = {s.layer + 1, it->second};
        }
        return s;
    }

    Network build(Signal root) {
        root = lift(root, std::max<std::size_t>(root.layer, 1));
        Network net;
        net.inputs = inputs_;
        std::size_t prev = inputs_.size();
        for (const auto& protos : layers_) {
            Layer layer;
            layer.rows = protos.size();
            layer.cols = prev;
            layer.weights.assign(layer.rows * layer.cols, 0.0);
            layer.biases.reserve(layer.rows);
            for (std::size_t r = 0; r < protos.size(); ++r) {
                layer.biases.push_back(protos[r].bias);
                for (const auto& [src, w] : protos[r].taps) {
                    layer.weights[r * layer.cols + src] += w;
                }
            }
            prev = layer.rows;
            net.layers.push_back(std::move(layer));
        }
        return net;
    }

private:
    struct Proto {
        double bias;
        std::vector<std::pair<std::size_t, double>> taps;  // src index, weight
    };

    Signal add(std::size_t layer, double bias,
               std::vector<std::pair<std::size_t, double>> taps) {
        if (layers_.size() < layer) layers_.resize(layer);
        auto& row = layers_[layer - 1];
        row.push_back(Proto{bias, std::move(taps)});
        return {layer, row.size() - 1};
    }

    std::vector<std::string> inputs_;
    std::map<std::string, std::size_t> input_index_;
    std::vector<std::vector<Proto>> layers_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pass_memo_;
};

}  // namespace

Network compile(const Formula& f) {
    const Formula lowered = rewrite_implications(strip_possibly(f));
    Builder builder(free_variables(lowered));
    Network net = builder.build(builder.lower(lowered));
    net.validate();
    return net;
}

Network compile_incompatibility_probe(const Formula& f) {
    const Formula g = strip_possibly(f);
    if (g.kind() != Kind::Implies) {
        throw std::invalid_argument(
            "incompatibility probe needs an implication, got " + to_string(g));
    }
    return compile(conj(g.left(), neg(g.right())));
}

namespace {

struct RowOutcome {
    bool raw_ok;
    bool gate_ok;
    double raw_distance;
    double gate_distance;
    double margin;  // smallest |pre-activation| on the gate route
};

// Both propagation routes for one assignment. `bits` packs the row per
// the TruthTable convention (first variable most significant).
RowOutcome sweep_row(const Network& net, std::uint32_t bits, std::size_t n,
                     bool target) {
    std::vector<double> raw(n), clean(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double bit = (bits >> (n - 1 - i)) & 1u ? 1.0 : 0.0;
        raw[i] = bit;
        clean[i] = bit;
    }

    double margin = std::numeric_limits<double>::infinity();
    double gate_out = 0.0;
    for (const Layer& layer : net.layers) {
        std::vector<double> raw_next(layer.rows), clean_next(layer.rows);
        for (std::size_t r = 0; r < layer.rows; ++r) {
            double raw_z = layer.biases[r];
            double gate_z = layer.biases[r];
            const double* w = layer.weights.data() + r * layer.cols;
            for (std::size_t c = 0; c < layer.cols; ++c) {
                raw_z += w[c] * raw[c];
                gate_z += w[c] * clean[c];
            }
            margin = std::min(margin, std::abs(gate_z));
            raw_next[r] = layer.activation(raw_z);
            const double a = layer.activation(gate_z);
            gate_out = a;
            clean_next[r] = a >= 0.5 ? 1.0 : 0.0;
        }
        raw = std::move(raw_next);
        clean = std::move(clean_next);
    }

    const double want = target ? 1.0 : 0.0;
    RowOutcome out;
    out.raw_ok = (raw[0] >= 0.5) == target;
    out.gate_ok = (clean[0] >= 0.5) == target;
    out.raw_distance = std::abs(raw[0] - want);
    out.gate_distance = std::abs(gate_out - want);
    out.margin = margin;
    return out;
}

}  // namespace

VerificationReport verify(const Formula& f) { return verify(f, compile(f)); }

VerificationReport verify(const Formula& f, const Network& net) {
    net.validate();
    const std::vector<std::string> vars = free_variables(f);
    if (vars.size() > kMaxVerifyVariables) {
        throw std::invalid_argument(
            "verification sweeps all assignments and is capped at " +
            std::to_string(kMaxVerifyVariables) + " variables; formula has " +
            std::to_string(vars.size()));
    }
    if (net.inputs != vars) {
        throw std::invalid_argument(
            "network inputs do not match the formula's variables");
    }
    if (net.output_width() != 1) {
        throw std::invalid_argument("verification needs a single-output network");
    }

    const std::size_t n = vars.size();
    const std::size_t rows = std::size_t{1} << n;
    const EvalProgram program(f, vars);

    VerificationReport report;
    report.formula = to_string(f);
    report.variables = vars;
    report.rows = rows;

    std::vector<std::uint8_t> mismatch(rows, 0);
    std::size_t mismatches = 0;
    double max_distance = 0.0;
    double max_raw_distance = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();

#pragma omp parallel for schedule(static) if (rows >= 4096) \
    reduction(+ : mismatches) reduction(max : max_distance, max_raw_distance) \
    reduction(min : min_margin)
    for (std::int64_t row = 0; row < static_cast<std::int64_t>(rows); ++row) {
        const auto bits = static_cast<std::uint32_t>(rows - 1 - row);
        const bool target = program.run(bits);
        const RowOutcome outcome = sweep_row(net, bits, n, target);
        if (!outcome.raw_ok || !outcome.gate_ok) {
            mismatch[row] = 1;
            ++mismatches;
        }
        max_distance = std::max(max_distance, outcome.gate_distance);
        max_raw_distance = std::max(max_raw_distance, outcome.raw_distance);
        min_margin = std::min(min_margin, outcome.margin);
    }

    report.mismatches = mismatches;
    for (std::size_t row = 0; row < rows; ++row) {
        if (mismatch[row]) report.mismatch_rows.push_back(row);
    }
    report.max_distance = max_distance;
    report.max_raw_distance = max_raw_distance;
    report.min_margin = min_margin;
    report.pass = mismatches == 0;
    return report;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["formula"] = formula;
    j["variables"] = variables;
    j["rows"] = rows;
    j["mismatches"] = mismatches;
    j["mismatch_rows"] = mismatch_rows;
    j["max_distance"] = max_distance;
    j["max_raw_distance"] = max_raw_distance;
    j["min_margin"] = min_margin;
    j["pass"] = pass;
    return j.dump(2);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "formula:          " << formula << "\n";
    out << "variables:       ";
    for (const auto& v : variables) out << " " << v;
    out << "\n";
    out << "rows:             " << rows << "\n";
    out << "mismatches:       " << mismatches << "\n";
    if (!mismatch_rows.empty()) {
        out << "mismatch rows:   ";
        std::size_t shown = 0;
        for (std::size_t row : mismatch_rows) {
            if (shown++ == 16) {
                out << " ...";
                break;
            }
            out << " " << row;
        }
        out << "\n";
    }
    out << "max distance:     " << max_distance << " (clean-bit route)\n";
    out << "max raw distance: " << max_raw_distance << " (full propagation)\n";
    out << "min margin:       " << min_margin << "\n";
    out << "result:           " << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace logicnet
