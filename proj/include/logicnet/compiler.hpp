#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "logicnet/formula.hpp"
#include "logicnet/network.hpp"

namespace logicnet {

// The fixed gate templates every compiled neuron is built from. On {0,1}
// inputs each gate's pre-activation magnitude is at least 5, so the
// sigmoid output is always on the correct side of the 0.5 cut with margin
// sigmoid(5) - 0.5.
namespace gate {

inline constexpr double kNotBias = 5.0;
inline constexpr double kNotWeight = -10.0;
inline constexpr double kPassBias = -10.0;
inline constexpr double kPassWeight = 20.0;
inline constexpr double kOrBias = -5.0;
inline constexpr double kFanWeight = 10.0;  // AND/OR per-input weight

inline constexpr double and_bias(std::size_t fan_in) {
    return 5.0 - 10.0 * static_cast<double>(fan_in);
}

struct Gate {
    double bias;
    std::vector<double> weights;  // one per fan-in position
};

Gate not_gate();
Gate pass_gate();
Gate or_gate(std::size_t fan_in);
Gate and_gate(std::size_t fan_in);

}  // namespace gate

// Lower a formula to a sigmoid network whose binarized output reproduces
// the formula's truth table:
//   - Possibly nodes are stripped (they are transparent to evaluation);
//   - Implies(a, b) becomes Or(Not(a), b);
//   - each remaining connective becomes one neuron in the layer equal to
//     its height, and shallower children are lifted with chains of PASS
//     neurons so every connection spans exactly one layer.
// A bare variable compiles to a single PASS neuron.
Network compile(const Formula& f);

// Network for the failure region of an implication: given Implies(x, y),
// returns compile(And(x, Not(y))), which fires exactly where the
// implication's network does not. Throws std::invalid_argument when the
// formula (after stripping Possibly) is not an implication.
Network compile_incompatibility_probe(const Formula& f);

inline constexpr std::size_t kMaxVerifyVariables = 16;

// Outcome of checking a compiled network against brute-force evaluation
// on every assignment. Two routes are run per row:
//   raw route    full sigmoid propagation, binarized at the output;
//   gate route   previous-layer activations binarized before each layer,
//                so every neuron sees clean bits.
// pass requires both routes to agree with eval() on every row.
// max_distance is the gate route's final-layer worst |raw - target bit|
// (bounded by sigmoid(-5) for catalog gates); max_raw_distance is the
// same measure for the raw route, where small per-gate errors compound.
struct VerificationReport {
    std::string formula;
    std::vector<std::string> variables;
    std::size_t rows = 0;
    std::size_t mismatches = 0;
    std::vector<std::size_t> mismatch_rows;
    double max_distance = 0.0;
    double max_raw_distance = 0.0;
    // Smallest |pre-activation| any neuron sees on the gate route.
    double min_margin = std::numeric_limits<double>::infinity();
    bool pass = false;

    std::string to_json() const;
    std::string to_text() const;
};

// Compile and sweep all 2^n assignments (OpenMP across rows). Throws
// std::invalid_argument beyond kMaxVerifyVariables.
VerificationReport verify(const Formula& f);
VerificationReport verify(const Formula& f, const Network& net);

}  // namespace logicnet
