// Parallel sweep kernels against their serial reference twins. The
// interesting numbers are rows/second for the table and verification
// sweeps and probes/second for batch recall.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "logicnet/compiler.hpp"
#include "logicnet/formula.hpp"
#include "logicnet/hopfield.hpp"
#include "logicnet/reference.hpp"
#include "logicnet/rng.hpp"

using namespace logicnet;

namespace {

Formula chain_formula(int vars) {
    Formula f = conj(var("v0"), neg(var("v1")));
    int i = 2;
    for (; i + 1 < vars; i += 2) {
        f = disj(f, conj(var("v" + std::to_string(i)),
                         neg(var("v" + std::to_string(i + 1)))));
    }
    if (i < vars) f = disj(f, var("v" + std::to_string(i)));
    return f;
}

Pattern random_pattern(DetRng& rng, std::size_t n) {
    Pattern p(n);
    for (auto& s : p) s = static_cast<std::int8_t>(rng.pm_one());
    return p;
}

struct RecallSetup {
    HopfieldNet net;
    std::vector<Pattern> probes;
};

RecallSetup recall_setup(std::size_t probe_count) {
    DetRng rng(1);
    std::vector<Pattern> stored;
    for (int i = 0; i < 3; ++i) stored.push_back(random_pattern(rng, 32));
    RecallSetup setup{store(stored, 32), {}};
    for (std::size_t i = 0; i < probe_count; ++i) {
        setup.probes.push_back(random_pattern(rng, 32));
    }
    return setup;
}

}  // namespace

static void BM_truth_table(benchmark::State& state) {
    const Formula f = chain_formula(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(truth_table(f));
    }
    state.SetItemsProcessed(state.iterations() *
                            (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_truth_table)->Arg(12)->Arg(16);

static void BM_truth_table_serial(benchmark::State& state) {
    const Formula f = chain_formula(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::truth_table(f));
    }
    state.SetItemsProcessed(state.iterations() *
                            (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_truth_table_serial)->Arg(12)->Arg(16);

static void BM_verify(benchmark::State& state) {
    const Formula f = chain_formula(static_cast<int>(state.range(0)));
    const Network net = compile(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(f, net));
    }
    state.SetItemsProcessed(state.iterations() *
                            (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_verify)->Arg(12)->Arg(14);

static void BM_verify_serial(benchmark::State& state) {
    const Formula f = chain_formula(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::verify(f));
    }
    state.SetItemsProcessed(state.iterations() *
                            (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_verify_serial)->Arg(12)->Arg(14);

static void BM_recall_batch(benchmark::State& state) {
    const RecallSetup setup = recall_setup(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            recall_batch(setup.net, setup.probes, UpdateOrder::ascending()));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_recall_batch)->Arg(64)->Arg(256);

static void BM_recall_batch_serial(benchmark::State& state) {
    const RecallSetup setup = recall_setup(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::recall_batch(
            setup.net, setup.probes, UpdateOrder::ascending()));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_recall_batch_serial)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
