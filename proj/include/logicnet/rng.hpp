#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace logicnet {

// Deterministic random source used everywhere randomness is needed.
// The engine is std::mt19937_64, whose output stream is fixed by the
// standard; the mappings below are written out explicitly so the values
// drawn are identical across platforms and standard libraries.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // +1 or -1 from the top bit.
    int pm_one() { return (next_u64() >> 63) ? +1 : -1; }

    // Fisher-Yates using below(); the result depends only on the seed.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::mt19937_64 gen_;
};

// Name recorded in reports so a run can be reproduced from its document.
inline constexpr const char* kRngName = "mt19937_64";

}  // namespace logicnet
