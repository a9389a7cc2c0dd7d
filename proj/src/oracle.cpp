#include "randtree/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace randtree {

namespace {

constexpr std::uint64_t kCatalanMax = 33; // C(33) is the last to fit u64

} // namespace

std::uint64_t catalan_exact(std::uint64_t n) {
    if (n > kCatalanMax)
        throw Overflow("catalan_exact: n above 33 overflows unsigned 64-bit");
    std::array<std::uint64_t, kCatalanMax + 1> c{};
    c[0] = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t sum = 0;
        for (std::uint64_t i = 0; i <= k; ++i)
            sum += c[i] * c[k - i];
        c[k + 1] = sum;
    }
    return c[n];
}

namespace {

// Depth-first over prefixes, FUNC2 branch first, which yields lexicographic
// order with FUNC2 < LEAF. A prefix extends with LEAF only while leaves do
// not outnumber functions (the open-slot counter stays positive), except at
// the forced final position.
void extend(ShapeSequence& prefix, std::uint64_t funcs, std::uint64_t leaves,
            std::uint64_t n, std::vector<ShapeSequence>& out) {
    const std::uint64_t length = 2 * n + 1;
    if (prefix.tags.size() == length) {
        out.push_back(prefix);
        return;
    }
    if (funcs < n) {
        prefix.tags.push_back(kFunc2Byte);
        extend(prefix, funcs + 1, leaves, n, out);
        prefix.tags.pop_back();
    }
    if (leaves < n + 1 &&
        (leaves < funcs || prefix.tags.size() + 1 == length)) {
        prefix.tags.push_back(kLeafByte);
        extend(prefix, funcs, leaves + 1, n, out);
        prefix.tags.pop_back();
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::vector<ShapeSequence> enumerate_shapes(std::uint64_t n) {
    if (n > 14)
        throw TooLarge("enumerate_shapes: n above 14 (2,674,440 shapes)");
    std::vector<ShapeSequence> out;
    out.reserve(catalan_exact(n));
    ShapeSequence prefix;
    prefix.tags.reserve(2 * n + 1);
    extend(prefix, 0, 0, n, out);
    return out;
}

CycleLemmaReport verify_cycle_lemma(std::uint64_t n) {
    if (n > 6)
        throw DomainError("verify_cycle_lemma: n above 6 is not exhaustively "
                          "checkable at desk scale");
    const std::size_t length = static_cast<std::size_t>(2 * n + 1);

    CycleLemmaReport report;
    std::map<std::uint64_t, std::uint64_t> fibers;

    // All distinct arrangements of n FUNC2 / n+1 LEAF tags, in
    // next_permutation order over the tag bytes.
    ShapeSequence arrangement;
    arrangement.tags.assign(length, kLeafByte);
    for (std::uint64_t i = 0; i < n; ++i)
        arrangement.tags[length - 1 - i] = kFunc2Byte;
    std::sort(arrangement.tags.begin(), arrangement.tags.end());

    do {
        ++report.arrangements;

        std::size_t valid_rotations = 0;
        std::size_t valid_start = 0;
        for (std::size_t r = 0; r < length; ++r) {
            ShapeSequence rotated = arrangement;
            rotate_left(rotated, r);
            if (is_valid_preorder(rotated)) {
                ++valid_rotations;
                valid_start = r;
            }
        }
        if (valid_rotations != 1) {
            report.pass = false;
            report.diagnostic = "arrangement with " +
                                std::to_string(valid_rotations) +
                                " valid rotations (expected exactly 1)";
            return report;
        }

        const std::size_t selected = first_min_index(arrangement) % length;
        if (selected != valid_start) {
            report.pass = false;
            report.diagnostic =
                "first-minimum scan selected rotation " +
                std::to_string(selected) + " but the valid rotation is " +
                std::to_string(valid_start);
            return report;
        }

        ShapeSequence shape = arrangement;
        rotate_left(shape, selected);
        ++fibers[shape_key(shape)];
    } while (std::next_permutation(arrangement.tags.begin(),
                                   arrangement.tags.end()));

    if (report.arrangements != binomial(static_cast<std::uint64_t>(length), n)) {
        report.pass = false;
        report.diagnostic = "arrangement enumeration is incomplete";
        return report;
    }

    report.shapes = fibers.size();
    if (report.shapes != catalan_exact(n)) {
        report.pass = false;
        report.diagnostic = "shape count differs from the Catalan number";
        return report;
    }
    for (const auto& [key, count] : fibers) {
        if (count != length) {
            report.pass = false;
            report.diagnostic = "shape key " + std::to_string(key) +
                                " has fiber " + std::to_string(count) +
                                " (expected " + std::to_string(length) + ")";
            return report;
        }
    }
    report.fiber_size = length;
    report.pass = true;
    return report;
}

} // namespace randtree
