#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "randtree/errors.hpp"
#include "randtree/prng.hpp"

namespace randtree {

// Unlabeled node tag. Stored one byte per node so a billion-node shape costs
// about 1 GB and the same buffer can later be overwritten with opcodes.
enum class Tag : std::uint8_t { leaf = 0, func2 = 1 };

inline constexpr std::uint8_t kLeafByte = 0;
inline constexpr std::uint8_t kFunc2Byte = 1;

// Preorder tag buffer for a binary tree of size 2n+1 (n internal nodes,
// n+1 leaves). Between the shuffle and the rotation the buffer holds an
// arbitrary permutation of the tag multiset, not necessarily a valid tree.
struct ShapeSequence {
    std::vector<std::uint8_t> tags; // each byte is a Tag value

    std::size_t size() const noexcept { return tags.size(); }
    std::uint64_t internal_count() const noexcept { return tags.size() / 2; }
    Tag tag(std::size_t i) const noexcept { return static_cast<Tag>(tags[i]); }
    void set_tag(std::size_t i, Tag t) noexcept {
        tags[i] = static_cast<std::uint8_t>(t);
    }

    bool operator==(const ShapeSequence&) const = default;
};

template <class R>
concept UniformRng = requires(R& r, std::uint64_t b) {
    { r.uniform_below(b) } -> std::convertible_to<std::uint64_t>;
};

// LEAF, FUNC2, LEAF, FUNC2, ..., LEAF — the deterministic start sequence.
ShapeSequence fill_alternating(std::uint64_t internal_nodes);

// Smallest k in [1, L] whose prefix sum (FUNC2 = +1, LEAF = -1) attains the
// minimum of all prefix sums. For a tag multiset of n FUNC2 / n+1 LEAF the
// full sum is -1, so rotating the sequence to start at position k yields the
// unique valid preorder rotation.
std::size_t first_min_index(const ShapeSequence& seq);

// Cyclic left rotation: old position k becomes position 0. In place, O(L).
// k == 0 and k == L are the identity.
void rotate_left(ShapeSequence& seq, std::size_t k);

// True iff the open-slot counter (start 1; LEAF -1; FUNC2 +1) stays >= 1
// before the final tag and is exactly 0 after it.
bool is_valid_preorder(const ShapeSequence& seq) noexcept;

// Depth (node count of the deepest root-to-leaf path) in one pass over the
// preorder buffer, no recursion. Keeps a stack of pending-child counters, so
// extra space is O(depth). Throws InvalidShape if the sequence is not a
// valid preorder tree.
std::uint64_t depth_from_lattice(const ShapeSequence& seq);

// Canonical census key: FUNC2 = 1, LEAF = 0, first tag in the highest bit.
// Requires size <= 63.
std::uint64_t shape_key(const ShapeSequence& seq);

// "FLFLL"-style rendering, one character per tag.
std::string shape_string(const ShapeSequence& seq);

// Forward Fisher-Yates: each position swaps with a uniformly chosen position
// at or after it. Exactly L-1 bounded draws; tag multiset unchanged.
template <UniformRng R>
void knuth_shuffle(ShapeSequence& seq, R& rng) {
    auto& t = seq.tags;
    const std::size_t len = t.size();
    if (len < 2)
        return;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(rng.uniform_below(len - i));
        std::swap(t[i], t[j]);
    }
}

// Uniform random shape: alternate fill, shuffle, first-minimum scan, cyclic
// rotation. Each valid shape is the image of exactly 2n+1 permutations, so
// a uniform shuffle gives a uniform shape.
template <UniformRng R>
ShapeSequence random_shape(std::uint64_t internal_nodes, R& rng) {
    if (internal_nodes > (ParkMiller::kMaxState - 1) / 2)
        throw DomainError(
            "random_shape: size 2n+1 exceeds the generator range 2^31-2");
    ShapeSequence seq = fill_alternating(internal_nodes);
    knuth_shuffle(seq, rng);
    rotate_left(seq, first_min_index(seq));
    return seq;
}

} // namespace randtree
