#include "randtree/tree.hpp"

#include <utility>
#include <vector>

namespace randtree {

Tree random_tree(std::uint64_t size, const PrimitiveSet& primitives,
                 std::uint32_t seed, bool verify) {
    if (size == 0 || size % 2 == 0)
        throw InvalidSize("tree size must be an odd positive integer, got " +
                          std::to_string(size));
    ParkMiller rng(seed);
    ShapeSequence shape = random_shape((size - 1) / 2, rng);
    Tree tree = label_in_place(std::move(shape), primitives, rng, seed);
    if (verify && !wellformed(tree))
        throw InvalidShape("random_tree: output failed the wellformed check");
    return tree;
}

bool wellformed(const Tree& tree) noexcept {
    const std::size_t total = tree.primitives().total();
    const std::size_t terminals = tree.primitives().terminal_count();
    std::uint64_t open = 1;
    for (const std::uint8_t op : tree.opcodes()) {
        if (op >= total)
            return false; // opcode not defined in the primitive set
        if (open == 0)
            return false;
        open += (op >= terminals) ? 1 : static_cast<std::uint64_t>(-1);
    }
    return open == 0;
}

std::uint64_t depth_recursive_oracle(const Tree& tree,
                                     std::uint64_t call_depth_limit) {
    if (!wellformed(tree))
        throw InvalidShape("depth_recursive_oracle: tree is not wellformed");
    // depth(node) = 1 + max(depth(left), depth(right)), evaluated on an
    // explicit frame stack; frames.size() is the number of open ancestor
    // calls, so the current call depth is frames.size() + 1.
    struct Frame {
        std::uint64_t best = 0;
        std::uint8_t remaining = 2;
    };
    std::vector<Frame> frames;
    const auto ops = tree.opcodes();
    const std::size_t terminals = tree.primitives().terminal_count();
    std::size_t pos = 0;
    for (;;) {
        if (frames.size() >= call_depth_limit)
            throw RecursionLimit("depth_recursive_oracle: call depth above " +
                                 std::to_string(call_depth_limit) +
                                 "; use the lattice method");
        if (ops[pos] >= terminals) {
            frames.push_back(Frame{});
            ++pos;
            continue;
        }
        ++pos;
        std::uint64_t completed = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (completed > f.best)
                f.best = completed;
            if (--f.remaining > 0)
                break;
            completed = f.best + 1;
            frames.pop_back();
        }
        if (frames.empty())
            return completed; // wellformed() guarantees pos == size here
    }
}

std::string to_sexpr(const Tree& tree) {
    if (!wellformed(tree))
        throw InvalidShape("to_sexpr: tree is not wellformed");
    const PrimitiveSet& ps = tree.primitives();
    std::string out;
    out.reserve(tree.size() * 4);
    std::vector<std::uint8_t> remaining; // children left under each open node
    for (const std::uint8_t op : tree.opcodes()) {
        if (!remaining.empty())
            out += ' ';
        if (ps.is_function(op)) {
            out += '(';
            out += ps.name(op);
            remaining.push_back(2);
        } else {
            out += ps.name(op);
            while (!remaining.empty()) {
                if (--remaining.back() == 0) {
                    remaining.pop_back();
                    out += ')';
                } else {
                    break;
                }
            }
        }
    }
    return out;
}

namespace {

void append_dot_label(std::string& out, const std::string& name) {
    for (const char c : name) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
}

} // namespace

std::string to_dot(const Tree& tree, std::uint64_t node_limit) {
    if (tree.size() > node_limit)
        throw TooLarge("to_dot: tree size " + std::to_string(tree.size()) +
                       " above the node limit " + std::to_string(node_limit));
    if (!wellformed(tree))
        throw InvalidShape("to_dot: tree is not wellformed");
    const PrimitiveSet& ps = tree.primitives();
    std::string vertices = "digraph tree {\n";
    std::string edges;
    struct Open {
        std::uint64_t id;
        std::uint8_t remaining;
    };
    std::vector<Open> parents;
    std::uint64_t id = 0;
    for (const std::uint8_t op : tree.opcodes()) {
        vertices += "  n" + std::to_string(id) + " [label=\"";
        append_dot_label(vertices, ps.name(op));
        vertices += "\"];\n";
        if (!parents.empty()) {
            edges += "  n" + std::to_string(parents.back().id) + " -> n" +
                     std::to_string(id) + ";\n";
        }
        if (ps.is_function(op)) {
            parents.push_back({id, 2});
        } else {
            while (!parents.empty()) {
                if (--parents.back().remaining == 0)
                    parents.pop_back();
                else
                    break;
            }
        }
        ++id;
    }
    return vertices + edges + "}\n";
}

} // namespace randtree
