#include "randtree/shape.hpp"

#include <algorithm>
#include <limits>
#include <new>
#include <stdexcept>

namespace randtree {

ShapeSequence fill_alternating(std::uint64_t internal_nodes) {
    if (internal_nodes > (std::numeric_limits<std::size_t>::max() - 1) / 2)
        throw AllocationError("fill_alternating: 2n+1 exceeds addressable size");
    const std::size_t len = static_cast<std::size_t>(2 * internal_nodes + 1);
    ShapeSequence seq;
    try {
        seq.tags.resize(len);
    } catch (const std::bad_alloc&) {
        throw AllocationError("fill_alternating: tag buffer allocation failed");
    } catch (const std::length_error&) {
        throw AllocationError("fill_alternating: tag buffer allocation failed");
    }
    for (std::size_t i = 0; i < len; ++i)
        seq.tags[i] = (i % 2 == 0) ? kLeafByte : kFunc2Byte;
    return seq;
}

std::size_t first_min_index(const ShapeSequence& seq) {
    std::int64_t sum = 0;
    std::int64_t min_sum = std::numeric_limits<std::int64_t>::max();
    std::size_t min_pos = 0;
    for (std::size_t k = 0; k < seq.tags.size(); ++k) {
        sum += (seq.tags[k] == kFunc2Byte) ? 1 : -1;
        if (sum < min_sum) { // strict: keep the first occurrence
            min_sum = sum;
            min_pos = k + 1;
        }
    }
    return min_pos;
}

void rotate_left(ShapeSequence& seq, std::size_t k) {
    if (k > seq.tags.size())
        throw DomainError("rotate_left: k exceeds the sequence length");
    if (k == 0 || k == seq.tags.size())
        return;
    std::rotate(seq.tags.begin(),
                seq.tags.begin() + static_cast<std::ptrdiff_t>(k),
                seq.tags.end());
}

bool is_valid_preorder(const ShapeSequence& seq) noexcept {
    if (seq.tags.empty())
        return false;
    std::uint64_t open = 1;
    for (const std::uint8_t t : seq.tags) {
        if (open == 0)
            return false; // the tree closed but tags remain
        open += (t == kFunc2Byte) ? 1 : static_cast<std::uint64_t>(-1);
    }
    return open == 0;
}

std::uint64_t depth_from_lattice(const ShapeSequence& seq) {
    if (seq.tags.empty())
        throw InvalidShape("depth_from_lattice: empty sequence");
    std::vector<std::uint8_t> pending; // children still owed, per open node
    pending.reserve(64);
    std::uint64_t max_depth = 0;
    for (std::size_t i = 0; i < seq.tags.size(); ++i) {
        if (i > 0 && pending.empty())
            throw InvalidShape("depth_from_lattice: tags remain after the tree closed");
        if (seq.tags[i] == kFunc2Byte) {
            pending.push_back(2);
        } else {
            const std::uint64_t depth = pending.size() + 1;
            if (depth > max_depth)
                max_depth = depth;
            while (!pending.empty()) {
                if (--pending.back() == 0)
                    pending.pop_back(); // a finished subtree is a child too
                else
                    break;
            }
        }
    }
    if (!pending.empty())
        throw InvalidShape("depth_from_lattice: sequence ends before the tree closes");
    return max_depth;
}

std::uint64_t shape_key(const ShapeSequence& seq) {
    if (seq.tags.size() > 63)
        throw DomainError("shape_key: sequence longer than 63 tags");
    std::uint64_t key = 0;
    for (const std::uint8_t t : seq.tags)
        key = (key << 1) | (t == kFunc2Byte ? 1u : 0u);
    return key;
}

std::string shape_string(const ShapeSequence& seq) {
    std::string out;
    out.reserve(seq.tags.size());
    for (const std::uint8_t t : seq.tags)
        out += (t == kFunc2Byte) ? 'F' : 'L';
    return out;
}

} // namespace randtree
