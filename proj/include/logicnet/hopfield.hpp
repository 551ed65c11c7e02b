#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logicnet {

// Bipolar state vector, entries -1 or +1.
using Pattern = std::vector<std::int8_t>;

// string -> pattern: accepts "0110" (0 maps to -1) or "+--+".
Pattern pattern_from_string(std::string_view text);
// pattern -> "0110" form.
std::string pattern_to_string(const Pattern& p);

// Symmetric zero-diagonal weight matrix plus a current bipolar state.
struct HopfieldNet {
    std::size_t size = 0;
    std::vector<double> weights;  // size * size, row-major
    Pattern state;

    double weight_at(std::size_t i, std::size_t j) const {
        return weights[i * size + j];
    }

    // Symmetry, zero diagonal, size consistency.
    void validate() const;
};

// Hebbian storage: w_ij = (1/N) * sum over patterns of x_i * x_j, with
// w_ii = 0. The state is set to the first pattern. All patterns must have
// length n and entries in {-1, +1}.
HopfieldNet store(const std::vector<Pattern>& patterns, std::size_t n);

// E(s) = -1/2 * sum_ij w_ij s_i s_j.
double energy(const HopfieldNet& net);
double energy_at(const HopfieldNet& net, const Pattern& state);

// Order in which neurons update within one sweep.
struct UpdateOrder {
    enum class Kind { Ascending, SeededPermutation };
    Kind kind = Kind::Ascending;
    std::uint64_t seed = 0;  // SeededPermutation: fresh permutation per sweep

    static UpdateOrder ascending() { return {Kind::Ascending, 0}; }
    static UpdateOrder seeded(std::uint64_t seed) {
        return {Kind::SeededPermutation, seed};
    }
};

struct RecallResult {
    Pattern state;
    std::size_t sweeps = 0;
    // Energy before any update, then after every single-neuron update.
    std::vector<double> energy_history;
    bool converged = false;  // a full sweep changed nothing

    std::string energy_csv() const;  // "step,energy" lines
};

// Asynchronous recall from `probe`: neuron by neuron,
// s_i <- sign(sum_j w_ij s_j), where sign(0) keeps the previous state.
// Zero diagonal makes every flip strictly lower the energy, so the run
// halts; it stops after a sweep with no change or after max_sweeps.
// The net is not mutated.
RecallResult recall(const HopfieldNet& net, const Pattern& probe,
                    const UpdateOrder& order, std::size_t max_sweeps = 100);

// recall() over many probes (OpenMP across probes). With a seeded order,
// probe i uses seed order.seed + i.
std::vector<RecallResult> recall_batch(const HopfieldNet& net,
                                       const std::vector<Pattern>& probes,
                                       const UpdateOrder& order,
                                       std::size_t max_sweeps = 100);

}  // namespace logicnet
