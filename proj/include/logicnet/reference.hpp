#pragma once

#include "logicnet/compiler.hpp"
#include "logicnet/formula.hpp"
#include "logicnet/hopfield.hpp"

// Plain serial implementations of the parallel sweeps, kept as the
// reference the OpenMP kernels are tested against. They follow the
// simplest possible route (per-row Assignment maps, straight loops) and
// must produce bit-identical results.
namespace logicnet::reference {

TruthTable truth_table(const Formula& f);

VerificationReport verify(const Formula& f);

std::vector<RecallResult> recall_batch(const HopfieldNet& net,
                                       const std::vector<Pattern>& probes,
                                       const UpdateOrder& order,
                                       std::size_t max_sweeps = 100);

}  // namespace logicnet::reference
