#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "randtree/errors.hpp"

namespace randtree {

// Named terminals (arity 0) and binary functions (arity 2) with dense
// one-byte opcodes: terminals first in order of appearance, then functions.
// At most 255 primitives so every opcode fits the per-node byte.
class PrimitiveSet {
public:
    static constexpr std::size_t kMaxPrimitives = 255;

    PrimitiveSet(std::vector<std::string> terminals,
                 std::vector<std::string> functions);

    // Line format: "name arity" with arity 0 or 2, one primitive per line.
    // '#' starts a comment; blank lines are ignored.
    static PrimitiveSet parse(std::string_view text);
    static PrimitiveSet load(const std::filesystem::path& path);

    std::size_t terminal_count() const noexcept { return terminal_count_; }
    std::size_t function_count() const noexcept {
        return names_.size() - terminal_count_;
    }
    std::size_t total() const noexcept { return names_.size(); }

    std::uint8_t terminal_opcode(std::size_t i) const {
        return static_cast<std::uint8_t>(i);
    }
    std::uint8_t function_opcode(std::size_t i) const {
        return static_cast<std::uint8_t>(terminal_count_ + i);
    }

    bool defined(std::uint8_t opcode) const noexcept {
        return opcode < names_.size();
    }
    bool is_function(std::uint8_t opcode) const noexcept {
        return opcode >= terminal_count_;
    }
    unsigned arity(std::uint8_t opcode) const noexcept {
        return is_function(opcode) ? 2u : 0u;
    }
    const std::string& name(std::uint8_t opcode) const {
        return names_.at(opcode);
    }

    // Same names in the same order with the same arities.
    bool operator==(const PrimitiveSet&) const = default;

private:
    std::vector<std::string> names_; // terminals then functions
    std::size_t terminal_count_ = 0;
};

} // namespace randtree
