#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "logicnet/compiler.hpp"
#include "logicnet/formula.hpp"
#include "logicnet/hopfield.hpp"
#include "logicnet/reference.hpp"
#include "logicnet/rng.hpp"

using namespace logicnet;

namespace {

// Twelve variables, 4096 rows: enough to push the sweeps onto the
// parallel path, which kicks in at 4096.
Formula wide_formula() {
    Formula f = conj(var("v0"), var("v1"));
    for (int i = 2; i + 1 < 12; i += 2) {
        f = disj(f, conj(var("v" + std::to_string(i)),
                         neg(var("v" + std::to_string(i + 1)))));
    }
    return f;
}

Pattern random_pattern(DetRng& rng, std::size_t n) {
    Pattern p(n);
    for (auto& s : p) s = static_cast<std::int8_t>(rng.pm_one());
    return p;
}

}  // namespace

TEST_CASE("parallel truth table equals the serial reference") {
    for (const Formula& f : {implies(var("p"), var("q")), wide_formula()}) {
        const TruthTable fast = truth_table(f);
        const TruthTable slow = reference::truth_table(f);
        CHECK(fast == slow);
    }
}

TEST_CASE("parallel verification equals the serial reference bit for bit") {
    for (const Formula& f :
         {implies(var("p"), var("q")),
          disj(var("p"), conj(var("q"), neg(var("r")))), wide_formula()}) {
        const VerificationReport fast = verify(f);
        const VerificationReport slow = reference::verify(f);
        CHECK(fast.formula == slow.formula);
        CHECK(fast.variables == slow.variables);
        CHECK(fast.rows == slow.rows);
        CHECK(fast.mismatches == slow.mismatches);
        CHECK(fast.mismatch_rows == slow.mismatch_rows);
        CHECK(fast.max_distance == slow.max_distance);
        CHECK(fast.max_raw_distance == slow.max_raw_distance);
        CHECK(fast.min_margin == slow.min_margin);
        CHECK(fast.pass == slow.pass);
        CHECK(fast.to_json() == slow.to_json());
    }
}

TEST_CASE("parallel batch recall equals the serial reference") {
    DetRng rng(17);
    std::vector<Pattern> stored;
    for (int i = 0; i < 3; ++i) stored.push_back(random_pattern(rng, 16));
    const HopfieldNet net = store(stored, 16);

    std::vector<Pattern> probes;
    for (int i = 0; i < 96; ++i) probes.push_back(random_pattern(rng, 16));

    for (const UpdateOrder& order :
         {UpdateOrder::ascending(), UpdateOrder::seeded(11)}) {
        const auto fast = recall_batch(net, probes, order);
        const auto slow = reference::recall_batch(net, probes, order);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].state == slow[i].state);
            CHECK(fast[i].sweeps == slow[i].sweeps);
            CHECK(fast[i].converged == slow[i].converged);
            CHECK(fast[i].energy_history == slow[i].energy_history);
        }
    }
}
