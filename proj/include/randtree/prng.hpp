#pragma once

#include <cstdint>

#include "randtree/errors.hpp"

namespace randtree {

// Park-Miller "minimal standard" multiplicative congruential generator:
//
//     x <- 16807 * x mod (2^31 - 1)
//
// The modulus is prime and 16807 is a primitive root, so the transition is a
// bijection on [1, 2^31-2] with full period 2^31-2. The state never becomes
// 0 and never reaches the modulus. The 16807 * x product needs at most 46
// bits, so a 64-bit intermediate computes the step exactly.
class ParkMiller {
public:
    static constexpr std::uint64_t kMultiplier = 16807;
    static constexpr std::uint64_t kModulus = 2147483647;  // 2^31 - 1
    static constexpr std::uint32_t kMaxState = 2147483646; // kModulus - 1

    explicit ParkMiller(std::uint32_t seed) : state_(seed) {
        if (seed == 0 || seed > kMaxState)
            throw DomainError("seed must lie in [1, 2^31-2]");
    }

    // Advances one step and returns the new state (Lehmer convention: the
    // raw output is the state itself).
    std::uint32_t next() noexcept {
        state_ = static_cast<std::uint32_t>(kMultiplier * state_ % kModulus);
        return state_;
    }

    std::uint32_t state() const noexcept { return state_; }

    // Unbiased integer in [0, bound). raw-1 is uniform on [0, 2^31-3]; draws
    // at or above the largest multiple of bound are rejected, then reduced.
    // A draw that lands in [0, cutoff) costs exactly one raw output.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0 || bound > kMaxState)
            throw DomainError("uniform_below: bound must lie in [1, 2^31-2]");
        const std::uint64_t raw_span = kMaxState; // count of distinct raw outputs
        const std::uint64_t cutoff = raw_span - raw_span % bound;
        for (;;) {
            const std::uint64_t v = next() - 1;
            if (v < cutoff)
                return v % bound;
        }
    }

private:
    std::uint32_t state_;
};

// Seed for trial `index`: the (index+1)-th output of a dedicated seeding
// stream started at `base`. The transition is a bijection, so indexes within
// one period (index < 2^31-3) give pairwise distinct seeds.
std::uint32_t derive_trial_seed(std::uint32_t base, std::uint64_t index);

} // namespace randtree
