#include "randtree/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "randtree/tree.hpp"

namespace randtree {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1)
        return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

void append_double(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

} // namespace

std::vector<BenchRecord> time_generation(std::span<const std::uint64_t> sizes,
                                         std::uint64_t reps,
                                         const PrimitiveSet& primitives,
                                         std::uint32_t base_seed) {
    if (reps == 0)
        throw DomainError("time_generation: reps must be at least 1");
    ParkMiller seeder(base_seed);
    std::vector<BenchRecord> records;
    records.reserve(sizes.size());
    for (const std::uint64_t size : sizes) {
        // Warm-up rep is untimed: first-touch page faults dominate at
        // gigabyte scale and would poison the first measurement.
        random_tree(size, primitives, seeder.next(), /*verify=*/false);
        std::vector<double> times;
        times.reserve(reps);
        for (std::uint64_t r = 0; r < reps; ++r) {
            const std::uint32_t seed = seeder.next();
            const auto start = Clock::now();
            random_tree(size, primitives, seed, /*verify=*/false);
            const auto stop = Clock::now();
            times.push_back(std::chrono::duration<double>(stop - start).count());
        }
        BenchRecord record;
        record.size = size;
        record.repetitions = reps;
        record.seconds = median(std::move(times));
        if (record.seconds <= 0.0)
            throw ClockError("time_generation: nonpositive duration measured");
        record.nodes_per_second = static_cast<double>(size) / record.seconds;
        records.push_back(record);
    }
    return records;
}

double loglog_slope(std::span<const BenchRecord> records) {
    std::vector<std::uint64_t> sizes;
    for (const auto& r : records)
        sizes.push_back(r.size);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    if (sizes.size() < 3)
        throw TooFewPoints("loglog_slope: need at least 3 distinct sizes");

    double sx = 0.0, sy = 0.0;
    for (const auto& r : records) {
        if (r.seconds <= 0.0)
            throw DomainError("loglog_slope: record with nonpositive seconds");
        sx += std::log(static_cast<double>(r.size));
        sy += std::log(r.seconds);
    }
    const double n = static_cast<double>(records.size());
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : records) {
        const double dx = std::log(static_cast<double>(r.size)) - mx;
        const double dy = std::log(r.seconds) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    return sxy / sxx;
}

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out) {
    std::string text = "size,reps,seconds,nodes_per_sec\n";
    for (const auto& r : records) {
        text += std::to_string(r.size);
        text += ',';
        text += std::to_string(r.repetitions);
        text += ',';
        append_double(text, r.seconds);
        text += ',';
        append_double(text, r.nodes_per_second);
        text += '\n';
    }
    out << text;
    if (!out)
        throw IoError("write_bench_csv: stream write failed");
}

void write_bench_csv(std::span<const BenchRecord> records,
                     const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_bench_csv(records, out);
}

} // namespace randtree
