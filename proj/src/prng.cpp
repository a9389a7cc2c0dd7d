#include "randtree/prng.hpp"

namespace randtree {

std::uint32_t derive_trial_seed(std::uint32_t base, std::uint64_t index) {
    // One full period guarantees injectivity; beyond it seeds would repeat.
    if (index >= ParkMiller::kModulus - 2)
        throw DomainError("derive_trial_seed: index must be below 2^31-3");
    ParkMiller seeder(base);
    std::uint32_t seed = 0;
    for (std::uint64_t i = 0; i <= index; ++i)
        seed = seeder.next();
    return seed;
}

} // namespace randtree
