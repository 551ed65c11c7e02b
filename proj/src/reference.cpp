#include "logicnet/reference.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace logicnet::reference {

TruthTable truth_table(const Formula& f) {
    TruthTable table;
    table.variables = free_variables(f);
    const std::size_t n = table.variables.size();
    if (n > kMaxTableVariables) {
        throw std::invalid_argument("too many variables");
    }
    const std::size_t rows = std::size_t{1} << n;
    table.outputs.resize(rows);
    for (std::size_t row = 0; row < rows; ++row) {
        const std::size_t value = rows - 1 - row;
        Assignment a;
        for (std::size_t i = 0; i < n; ++i) {
            a[table.variables[i]] = (value >> (n - 1 - i)) & 1u;
        }
        table.outputs[row] = eval(f, a) ? 1 : 0;
    }
    return table;
}

VerificationReport verify(const Formula& f) {
    const Network net = compile(f);
    const std::vector<std::string> vars = free_variables(f);
    if (vars.size() > kMaxVerifyVariables) {
        throw std::invalid_argument("too many variables");
    }
    const std::size_t n = vars.size();
    const std::size_t rows = std::size_t{1} << n;

    VerificationReport report;
    report.formula = to_string(f);
    report.variables = vars;
    report.rows = rows;

    for (std::size_t row = 0; row < rows; ++row) {
        const std::size_t value = rows - 1 - row;
        Assignment assignment;
        std::vector<double> raw(n), clean(n);
        for (std::size_t i = 0; i < n; ++i) {
            const bool bit = (value >> (n - 1 - i)) & 1u;
            assignment[vars[i]] = bit;
            raw[i] = bit ? 1.0 : 0.0;
            clean[i] = raw[i];
        }
        const bool target = eval(f, assignment);

        double gate_out = 0.0;
        for (const Layer& layer : net.layers) {
            std::vector<double> raw_next(layer.rows), clean_next(layer.rows);
            for (std::size_t r = 0; r < layer.rows; ++r) {
                double raw_z = layer.biases[r];
                double gate_z = layer.biases[r];
                for (std::size_t c = 0; c < layer.cols; ++c) {
                    raw_z += layer.weight_at(r, c) * raw[c];
                    gate_z += layer.weight_at(r, c) * clean[c];
                }
                report.min_margin = std::min(report.min_margin, std::abs(gate_z));
                raw_next[r] = layer.activation(raw_z);
                gate_out = layer.activation(gate_z);
                clean_next[r] = gate_out >= 0.5 ? 1.0 : 0.0;
            }
            raw = std::move(raw_next);
            clean = std::move(clean_next);
        }

        const double want = target ? 1.0 : 0.0;
        if (((raw[0] >= 0.5) != target) || ((clean[0] >= 0.5) != target)) {
            ++report.mismatches;
            report.mismatch_rows.push_back(row);
        }
        report.max_distance = std::max(report.max_distance, std::abs(gate_out - want));
        report.max_raw_distance =
            std::max(report.max_raw_distance, std::abs(raw[0] - want));
    }
    report.pass = report.mismatches == 0;
    return report;
}

std::vector<RecallResult> recall_batch(const HopfieldNet& net,
                                       const std::vector<Pattern>& probes,
                                       const UpdateOrder& order,
                                       std::size_t max_sweeps) {
    std::vector<RecallResult> results;
    results.reserve(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
        UpdateOrder per_probe = order;
        if (order.kind == UpdateOrder::Kind::SeededPermutation) {
            per_probe.seed = order.seed + i;
        }
        results.push_back(recall(net, probes[i], per_probe, max_sweeps));
    }
    return results;
}

}  // namespace logicnet::reference
