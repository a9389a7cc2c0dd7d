#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "randtree/tree.hpp"

namespace randtree {

namespace {

constexpr std::array<char, 4> kMagic = {'R', 'B', 'T', '1'};
constexpr std::uint8_t kVersion = 0x01;

void put_u8(std::ostream& out, std::uint8_t v) {
    out.put(static_cast<char>(v));
}

void put_u16le(std::ostream& out, std::uint16_t v) {
    put_u8(out, static_cast<std::uint8_t>(v & 0xff));
    put_u8(out, static_cast<std::uint8_t>(v >> 8));
}

void put_u64le(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        put_u8(out, static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::uint8_t get_u8(std::istream& in) {
    const int c = in.get();
    if (c < 0)
        throw FormatError("opcode file truncated");
    return static_cast<std::uint8_t>(c);
}

std::uint16_t get_u16le(std::istream& in) {
    const std::uint16_t lo = get_u8(in);
    const std::uint16_t hi = get_u8(in);
    return static_cast<std::uint16_t>(lo | (hi << 8));
}

std::uint64_t get_u64le(std::istream& in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(get_u8(in)) << (8 * i);
    return v;
}

} // namespace

void write_opcodes(const Tree& tree, std::ostream& out) {
    if (!wellformed(tree))
        throw InvalidShape("write_opcodes: tree is not wellformed");
    const PrimitiveSet& ps = tree.primitives();
    out.write(kMagic.data(), kMagic.size());
    put_u8(out, kVersion);
    put_u64le(out, tree.size());
    put_u64le(out, tree.depth());
    put_u64le(out, tree.seed());
    put_u16le(out, static_cast<std::uint16_t>(ps.total()));
    for (std::size_t op = 0; op < ps.total(); ++op) {
        const std::string& name = ps.name(static_cast<std::uint8_t>(op));
        put_u8(out, static_cast<std::uint8_t>(name.size()));
        out.write(name.data(), static_cast<std::streamsize>(name.size()));
        put_u8(out, static_cast<std::uint8_t>(
                        ps.arity(static_cast<std::uint8_t>(op))));
    }
    const auto ops = tree.opcodes();
    out.write(reinterpret_cast<const char*>(ops.data()),
              static_cast<std::streamsize>(ops.size()));
    if (!out)
        throw IoError("write_opcodes: stream write failed");
}

Tree read_opcodes(std::istream& in, const PrimitiveSet& expected) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (in.gcount() != static_cast<std::streamsize>(magic.size()) ||
        magic != kMagic)
        throw FormatError("bad magic; not an RBT1 opcode file");
    if (get_u8(in) != kVersion)
        throw FormatError("unsupported opcode file version");
    const std::uint64_t size = get_u64le(in);
    const std::uint64_t depth = get_u64le(in);
    const std::uint64_t seed = get_u64le(in);
    if (size == 0 || size % 2 == 0)
        throw FormatError("size field must be an odd positive integer");
    if (depth == 0 || depth > (size + 1) / 2)
        throw FormatError("depth field out of range for the stated size");
    if (seed > ParkMiller::kMaxState)
        throw FormatError("seed field out of range");

    const std::uint16_t count = get_u16le(in);
    std::vector<std::string> terminals;
    std::vector<std::string> functions;
    bool saw_function = false;
    for (std::uint16_t i = 0; i < count; ++i) {
        const std::uint8_t len = get_u8(in);
        std::string name(len, '\0');
        in.read(name.data(), len);
        if (in.gcount() != len)
            throw FormatError("opcode file truncated inside a primitive name");
        const std::uint8_t arity = get_u8(in);
        if (arity == 0) {
            if (saw_function) // layout is terminals first, then functions
                throw FormatError("primitive table is not terminals-then-functions");
            terminals.push_back(std::move(name));
        } else if (arity == 2) {
            saw_function = true;
            functions.push_back(std::move(name));
        } else {
            throw FormatError("primitive arity must be 0 or 2");
        }
    }
    PrimitiveSet file_set(std::move(terminals), std::move(functions));
    if (!(file_set == expected))
        throw PrimitiveMismatch(
            "opcode file primitives differ from the expected set");

    std::vector<std::uint8_t> opcodes(size);
    in.read(reinterpret_cast<char*>(opcodes.data()),
            static_cast<std::streamsize>(size));
    if (in.gcount() != static_cast<std::streamsize>(size))
        throw FormatError("opcode file truncated in the opcode buffer");

    Tree tree(std::move(opcodes), depth, static_cast<std::uint32_t>(seed),
              std::move(file_set));
    if (!wellformed(tree))
        throw FormatError("opcode buffer is not a wellformed tree");
    return tree;
}

void write_opcode_file(const Tree& tree, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    write_opcodes(tree, out);
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

Tree read_opcode_file(const std::filesystem::path& path,
                      const PrimitiveSet& expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return read_opcodes(in, expected);
}

} // namespace randtree
