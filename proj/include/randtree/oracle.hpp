#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "randtree/shape.hpp"

namespace randtree {

// Occurrence counts keyed by shape_key (FUNC2 = 1, LEAF = 0 bit string).
struct ShapeCensus {
    std::uint64_t internal_nodes = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    void add(std::uint64_t key) { ++counts[key]; }
};

// Number of binary tree shapes with n internal nodes, by the convolution
// recurrence C0 = 1, C(k+1) = sum Ci * C(k-i). Exact; n <= 33 keeps the
// result (and every partial sum) inside unsigned 64 bits.
std::uint64_t catalan_exact(std::uint64_t n);

// All valid preorder shapes with n internal nodes, in lexicographic order
// of the tag strings with FUNC2 < LEAF. n <= 14 (2,674,440 shapes).
std::vector<ShapeSequence> enumerate_shapes(std::uint64_t n);

struct CycleLemmaReport {
    std::uint64_t arrangements = 0;
    std::uint64_t shapes = 0;
    std::uint64_t fiber_size = 0;
    bool pass = false;
    std::string diagnostic; // non-empty when pass is false
};

// Exhaustive warrant for the generator's uniformity: over every arrangement
// of n FUNC2 / n+1 LEAF tags, exactly one of the 2n+1 rotations is a valid
// preorder sequence, the first-minimum scan selects precisely that rotation,
// and every shape is hit by exactly 2n+1 arrangements. n <= 6.
CycleLemmaReport verify_cycle_lemma(std::uint64_t n);

} // namespace randtree
