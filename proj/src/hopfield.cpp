#include "logicnet/hopfield.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "logicnet/rng.hpp"

namespace logicnet {

Pattern pattern_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    Pattern p;
    p.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '0':
            case '-':
                p.push_back(-1);
                break;
            case '1':
            case '+':
                p.push_back(+1);
                break;
            default:
                throw std::invalid_argument(std::string("bad pattern character '") +
                                            c + "'; use 0/1 or -/+");
        }
    }
    return p;
}

std::string pattern_to_string(const Pattern& p) {
    std::string s;
    s.reserve(p.size());
    for (std::int8_t x : p) s.push_back(x > 0 ? '1' : '0');
    return s;
}

void HopfieldNet::validate() const {
    if (size == 0) throw std::invalid_argument("empty network");
    if (weights.size() != size * size) {
        throw std::invalid_argument("weight matrix is not size x size");
    }
    if (state.size() != size) {
        throw std::invalid_argument("state length does not match size");
    }
    for (std::size_t i = 0; i < size; ++i) {
        if (weight_at(i, i) != 0.0) {
            throw std::invalid_argument("diagonal must be zero");
        }
        for (std::size_t j = i + 1; j < size; ++j) {
            if (weight_at(i, j) != weight_at(j, i)) {
                throw std::invalid_argument("weights must be symmetric");
            }
        }
    }
    for (std::int8_t x : state) {
        if (x != -1 && x != +1) {
            throw std::invalid_argument("state entries must be -1 or +1");
        }
    }
}

HopfieldNet store(const std::vector<Pattern>& patterns, std::size_t n) {
    if (n == 0) throw std::invalid_argument("network size must be positive");
    if (patterns.empty()) throw std::invalid_argument("nothing to store");
    for (const Pattern& p : patterns) {
        if (p.size() != n) {
            throw std::invalid_argument("pattern length " + std::to_string(p.size()) +
                                        " does not match network size " +
                                        std::to_string(n));
        }
        for (std::int8_t x : p) {
            if (x != -1 && x != +1) {
                throw std::invalid_argument("pattern entries must be -1 or +1");
            }
        }
    }

    HopfieldNet net;
    net.size = n;
    net.weights.assign(n * n, 0.0);
    const double scale = 1.0 / static_cast<double>(n);
    for (const Pattern& p : patterns) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double w = scale * p[i] * p[j];
                net.weights[i * n + j] += w;
                net.weights[j * n + i] += w;
            }
        }
    }
    net.state = patterns.front();
    return net;
}

double energy_at(const HopfieldNet& net, const Pattern& state) {
    if (state.size() != net.size) {
        throw std::invalid_argument("state length does not match network size");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < net.size; ++i) {
        const double* row = net.weights.data() + i * net.size;
        double acc = 0.0;
        for (std::size_t j = 0; j < net.size; ++j) {
            acc += row[j] * state[j];
        }
        total += acc * state[i];
    }
    return -0.5 * total;
}

double energy(const HopfieldNet& net) { return energy_at(net, net.state); }

RecallResult recall(const HopfieldNet& net, const Pattern& probe,
                    const UpdateOrder& order, std::size_t max_sweeps) {
    net.validate();
    if (probe.size() != net.size) {
        throw std::invalid_argument("probe length does not match network size");
    }
    for (std::int8_t x : probe) {
        if (x != -1 && x != +1) {
            throw std::invalid_argument("probe entries must be -1 or +1");
        }
    }

    RecallResult result;
    result.state = probe;
    result.energy_history.push_back(energy_at(net, result.state));

    std::vector<std::size_t> visit(net.size);
    std::iota(visit.begin(), visit.end(), 0);
    DetRng rng(order.seed);

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        if (order.kind == UpdateOrder::Kind::SeededPermutation) {
            std::iota(visit.begin(), visit.end(), 0);
            rng.shuffle(visit);
        }
        bool changed = false;
        for (std::size_t i : visit) {
            const double* row = net.weights.data() + i * net.size;
            double field = 0.0;
            for (std::size_t j = 0; j < net.size; ++j) {
                field += row[j] * result.state[j];
            }
            const std::int8_t next =
                field > 0.0 ? +1 : (field < 0.0 ? -1 : result.state[i]);
            if (next != result.state[i]) {
                result.state[i] = next;
                changed = true;
            }
            result.energy_history.push_back(energy_at(net, result.state));
        }
        result.sweeps = sweep + 1;
        if (!changed) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::vector<RecallResult> recall_batch(const HopfieldNet& net,
                                       const std::vector<Pattern>& probes,
                                       const UpdateOrder& order,
                                       std::size_t max_sweeps) {
    net.validate();
    std::vector<RecallResult> results(probes.size());
#pragma omp parallel for schedule(static) if (probes.size() >= 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(probes.size()); ++i) {
        UpdateOrder per_probe = order;
        if (order.kind == UpdateOrder::Kind::SeededPermutation) {
            per_probe.seed = order.seed + static_cast<std::uint64_t>(i);
        }
        results[i] = recall(net, probes[i], per_probe, max_sweeps);
    }
    return results;
}

std::string RecallResult::energy_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "step,energy\n";
    for (std::size_t i = 0; i < energy_history.size(); ++i) {
        out << i << "," << energy_history[i] << "\n";
    }
    return out.str();
}

}  // namespace logicnet
