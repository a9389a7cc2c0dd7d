#include "randtree/stats.hpp"

#include <cmath>
#include <unordered_map>

#include "randtree/oracle.hpp"

namespace randtree {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Regularized lower incomplete gamma P(a, x): series expansion for
// x < a + 1, Lentz continued fraction for the complement otherwise.
double gamma_p(double a, double x) {
    if (x <= 0.0)
        return 0.0;
    const double log_prefactor = a * std::log(x) - x - std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < 10000; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-15)
                break;
        }
        return sum * std::exp(log_prefactor);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15)
            break;
    }
    return 1.0 - std::exp(log_prefactor) * h;
}

double chi_square_cdf(double x, double dof) {
    return gamma_p(dof / 2.0, x / 2.0);
}

} // namespace

double flajolet_depth_limit(std::uint64_t size) {
    if (size == 0)
        throw DomainError("flajolet_depth_limit: size must be positive");
    return std::sqrt(2.0 * kPi * static_cast<double>(size));
}

double expected_height_internal(std::uint64_t internal_nodes) {
    if (internal_nodes == 0)
        throw DomainError("expected_height_internal: N must be positive");
    return 2.0 * std::sqrt(kPi * static_cast<double>(internal_nodes));
}

DepthSummary sample_depths(std::uint64_t size, std::uint64_t trials,
                           std::uint32_t base_seed,
                           std::vector<std::uint64_t>* per_trial) {
    if (size == 0 || size % 2 == 0)
        throw InvalidSize("sample_depths: size must be an odd positive integer");
    if (trials == 0)
        throw DomainError("sample_depths: trials must be at least 1");
    const std::uint64_t internal = (size - 1) / 2;

    // Advancing one seeding stream step by step reproduces
    // derive_trial_seed(base_seed, i) for i = 0, 1, ... without the
    // quadratic rewind.
    ParkMiller seeder(base_seed);

    DepthSummary summary;
    summary.size = size;
    summary.trials = trials;
    summary.min_depth = UINT64_MAX;
    summary.max_depth = 0;
    double mean = 0.0;
    double m2 = 0.0;
    if (per_trial) {
        per_trial->clear();
        per_trial->reserve(trials);
    }
    for (std::uint64_t i = 0; i < trials; ++i) {
        ParkMiller rng(seeder.next());
        const ShapeSequence shape = random_shape(internal, rng);
        const std::uint64_t depth = depth_from_lattice(shape);
        if (per_trial)
            per_trial->push_back(depth);
        summary.min_depth = std::min(summary.min_depth, depth);
        summary.max_depth = std::max(summary.max_depth, depth);
        const double d = static_cast<double>(depth);
        const double delta = d - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (d - mean);
    }
    summary.mean = mean;
    summary.std_dev =
        trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1)) : 0.0;
    summary.predicted = flajolet_depth_limit(size);
    summary.rel_error = std::fabs(mean - summary.predicted) / summary.predicted;
    return summary;
}

UniformityResult chi_square_uniform(std::uint64_t n, std::uint64_t trials,
                                    std::uint32_t base_seed,
                                    const ShapeSampler& sampler) {
    if (n < 2 || n > 8)
        throw DomainError("chi_square_uniform: n must lie in [2, 8]");
    const std::uint64_t bins = catalan_exact(n);
    if (trials < 10 * bins)
        throw TooFewTrials("chi_square_uniform: need at least 10 * Catalan(n) "
                           "= " + std::to_string(10 * bins) + " trials");

    std::unordered_map<std::uint64_t, std::uint64_t> census;
    census.reserve(bins * 2);
    ParkMiller seeder(base_seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        ParkMiller rng(seeder.next());
        const ShapeSequence shape =
            sampler ? sampler(n, rng) : random_shape(n, rng);
        ++census[shape_key(shape)];
    }

    // Pearson statistic over the valid shapes only; a biased sampler that
    // emits invalid sequences starves those bins and blows the statistic up.
    const double expected =
        static_cast<double>(trials) / static_cast<double>(bins);
    double statistic = 0.0;
    for (const ShapeSequence& shape : enumerate_shapes(n)) {
        const auto it = census.find(shape_key(shape));
        const double observed =
            it == census.end() ? 0.0 : static_cast<double>(it->second);
        const double diff = observed - expected;
        statistic += diff * diff / expected;
    }

    UniformityResult result;
    result.statistic = statistic;
    result.dof = bins - 1;
    result.critical = chi_square_critical(result.dof, 0.001);
    result.pass = statistic < result.critical;
    return result;
}

double chi_square_critical(std::uint64_t dof, double alpha) {
    if (dof < 1 || dof > 10000)
        throw DomainError("chi_square_critical: dof must lie in [1, 10^4]");
    if (alpha != 0.05 && alpha != 0.01 && alpha != 0.001)
        throw DomainError("chi_square_critical: alpha must be 0.05, 0.01 or 0.001");
    const double target = 1.0 - alpha;
    const double k = static_cast<double>(dof);

    double lo = 0.0;
    double hi = k + 10.0 * std::sqrt(2.0 * k) + 50.0;
    while (chi_square_cdf(hi, k) < target)
        hi *= 2.0;
    // ~40 halvings of an interval this size land far below the 1e-3 budget.
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (chi_square_cdf(mid, k) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace randtree
