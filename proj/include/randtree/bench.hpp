#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "randtree/primitives.hpp"

namespace randtree {

struct BenchRecord {
    std::uint64_t size = 0;
    std::uint64_t repetitions = 0;
    double seconds = 0.0;          // median over repetitions
    double nodes_per_second = 0.0; // size / seconds
};

// Times full tree generation (shape + labeling) per size: one untimed
// warm-up rep absorbs first-touch page faults, then `reps` timed reps with
// derived seeds, median wall-clock seconds on a monotonic clock. Wellformed
// checks are disabled. Strictly single-threaded.
std::vector<BenchRecord> time_generation(std::span<const std::uint64_t> sizes,
                                         std::uint64_t reps,
                                         const PrimitiveSet& primitives,
                                         std::uint32_t base_seed);

// Least-squares slope of log(seconds) vs log(size). Needs at least three
// records with distinct sizes. Linear-time generation shows up as ~1.0.
double loglog_slope(std::span<const BenchRecord> records);

// "size,reps,seconds,nodes_per_sec" header plus one row per record. Doubles
// are written as shortest round-trip decimals, locale independent.
void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out);
void write_bench_csv(std::span<const BenchRecord> records,
                     const std::filesystem::path& path);

} // namespace randtree
