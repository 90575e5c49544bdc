#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace hasse {

// Seeded generator with fully specified draw semantics. std::mt19937_64 output
// is pinned by the standard, but the standard *distributions* are not, so the
// few draw shapes we need are implemented here directly. `draws()` counts raw
// engine invocations; pipelines record it per stage.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        return engine_();
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform integer in [0, n) by rejection, bias-free.
    std::uint64_t uniform_index(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return r % n;
    }

    std::uint64_t draws() const { return draws_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

}  // namespace hasse
