#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "randtree/prng.hpp"
#include "randtree/shape.hpp"

namespace randtree {

// Asymptotic mean depth of a random binary tree of the given size (node
// count), sqrt(2*pi*size). Accurate to better than 2% above ~32,000 nodes.
double flajolet_depth_limit(std::uint64_t size);

// Leading term of the mean height with N internal nodes: 2*sqrt(pi*N).
double expected_height_internal(std::uint64_t internal_nodes);

struct DepthSummary {
    std::uint64_t size = 0;
    std::uint64_t trials = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    std::uint64_t min_depth = 0;
    std::uint64_t max_depth = 0;
    double predicted = 0.0; // flajolet_depth_limit(size)
    double rel_error = 0.0; // |mean - predicted| / predicted
};

// Depth distribution over `trials` shapes of the given size. Trial i is
// seeded with derive_trial_seed(base_seed, i); shapes are generated without
// labeling (labels cannot change depth). Mean and variance accumulate in
// trial-index order (Welford), so the result is bit-reproducible.
DepthSummary sample_depths(std::uint64_t size, std::uint64_t trials,
                           std::uint32_t base_seed,
                           std::vector<std::uint64_t>* per_trial = nullptr);

struct UniformityResult {
    double statistic = 0.0;
    std::uint64_t dof = 0;   // Catalan(n) - 1
    double critical = 0.0;   // upper-tail quantile at alpha = 0.001
    bool pass = false;
};

using ShapeSampler = std::function<ShapeSequence(std::uint64_t, ParkMiller&)>;

// Pearson goodness-of-fit of sampled shapes against the uniform expectation
// trials / Catalan(n), at alpha = 0.001. 2 <= n <= 8 and trials >= 10 *
// Catalan(n). The sampler defaults to random_shape; tests inject a biased
// one as a control.
UniformityResult chi_square_uniform(std::uint64_t n, std::uint64_t trials,
                                    std::uint32_t base_seed,
                                    const ShapeSampler& sampler = {});

// Upper-tail chi-square quantile via the regularized incomplete gamma
// function and bisection. dof in [1, 10^4], alpha in {0.05, 0.01, 0.001},
// absolute error <= 1e-3.
double chi_square_critical(std::uint64_t dof, double alpha);

} // namespace randtree
