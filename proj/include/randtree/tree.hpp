#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "randtree/errors.hpp"
#include "randtree/primitives.hpp"
#include "randtree/shape.hpp"

namespace randtree {

// A labeled program tree: flat preorder opcode buffer plus size, depth and
// the seed it was generated from. Immutable after construction; safe to
// share read-only across threads. The constructor accepts any buffer so
// that wellformed() can be used as the explicit debug check; the generation
// and file-reading paths guarantee their outputs pass it.
class Tree {
public:
    Tree(std::vector<std::uint8_t> opcodes, std::uint64_t depth,
         std::uint32_t seed, PrimitiveSet primitives)
        : opcodes_(std::move(opcodes)),
          depth_(depth),
          seed_(seed),
          primitives_(std::move(primitives)) {}

    std::uint64_t size() const noexcept { return opcodes_.size(); }
    std::uint64_t depth() const noexcept { return depth_; }
    std::uint32_t seed() const noexcept { return seed_; }
    const PrimitiveSet& primitives() const noexcept { return primitives_; }
    std::span<const std::uint8_t> opcodes() const noexcept { return opcodes_; }

private:
    std::vector<std::uint8_t> opcodes_;
    std::uint64_t depth_;
    std::uint32_t seed_;
    PrimitiveSet primitives_;
};

// Overwrites each tag with a uniformly chosen opcode of the matching arity.
// The tag buffer becomes the opcode buffer; no second allocation. The RNG is
// consulted only for classes with more than one member, so golden streams
// survive growth of the other class. Depth is computed from the lattice
// before labeling (which also validates the shape).
template <UniformRng R>
Tree label_in_place(ShapeSequence&& shape, const PrimitiveSet& primitives,
                    R& rng, std::uint32_t seed = 0) {
    const std::uint64_t depth = depth_from_lattice(shape);
    std::vector<std::uint8_t> buffer = std::move(shape.tags);
    const std::uint64_t terminals = primitives.terminal_count();
    const std::uint64_t functions = primitives.function_count();
    for (auto& b : buffer) {
        if (b == kFunc2Byte) {
            const std::uint64_t pick =
                functions > 1 ? rng.uniform_below(functions) : 0;
            b = static_cast<std::uint8_t>(terminals + pick);
        } else {
            const std::uint64_t pick =
                terminals > 1 ? rng.uniform_below(terminals) : 0;
            b = static_cast<std::uint8_t>(pick);
        }
    }
    return Tree(std::move(buffer), depth, seed, primitives);
}

// Uniform random tree of the given odd size: one generator seeded from
// `seed` drives the shape pass and then the labeling pass. Deterministic
// given (size, primitives, seed). With `verify` set the result is checked
// with wellformed() before returning; benchmark callers disable it.
Tree random_tree(std::uint64_t size, const PrimitiveSet& primitives,
                 std::uint32_t seed, bool verify = true);

// Every opcode defined and the arity-mapped tag sequence a valid preorder
// traversal. O(size), no recursion.
bool wellformed(const Tree& tree) noexcept;

// Textbook recursive depth, kept as an independent check on the lattice
// method. The recursion is emulated on an explicit frame stack so the call
// budget is enforced by throwing RecursionLimit instead of overflowing the
// machine stack.
std::uint64_t depth_recursive_oracle(const Tree& tree,
                                     std::uint64_t call_depth_limit = 1000000);

// "(ADD x (MUL y y))" — parenthesized preorder, single space separators.
std::string to_sexpr(const Tree& tree);

// Graphviz digraph, one vertex per node, edges parent -> child in child
// order. Refuses trees above node_limit.
std::string to_dot(const Tree& tree, std::uint64_t node_limit = 10000);

// Binary opcode format, little-endian, bit-exact:
//   magic "RBT1" | version 0x01 | size u64 | depth u64 | seed u64 |
//   primitive count u16 | per primitive: name length u8, name, arity u8 |
//   size opcode bytes
void write_opcodes(const Tree& tree, std::ostream& out);
void write_opcode_file(const Tree& tree, const std::filesystem::path& path);
Tree read_opcodes(std::istream& in, const PrimitiveSet& expected);
Tree read_opcode_file(const std::filesystem::path& path,
                      const PrimitiveSet& expected);

} // namespace randtree
