#include "randtree/primitives.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace randtree {

PrimitiveSet::PrimitiveSet(std::vector<std::string> terminals,
                           std::vector<std::string> functions) {
    if (terminals.empty() || functions.empty())
        throw IncompleteSet("need at least one terminal and one function");
    if (terminals.size() + functions.size() > kMaxPrimitives)
        throw TooManyPrimitives("opcodes must fit one byte (max 255 primitives)");
    std::unordered_set<std::string> seen;
    auto take = [&](std::vector<std::string>& src) {
        for (auto& name : src) {
            if (name.empty())
                throw FormatError("primitive names must be non-empty");
            if (!seen.insert(name).second)
                throw DuplicateName("primitive '" + name + "' defined twice");
            names_.push_back(std::move(name));
        }
    };
    take(terminals);
    terminal_count_ = names_.size();
    take(functions);
}

PrimitiveSet PrimitiveSet::parse(std::string_view text) {
    std::vector<std::string> terminals;
    std::vector<std::string> functions;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name))
            continue; // blank or comment-only line
        std::string arity;
        std::string extra;
        if (!(fields >> arity) || (fields >> extra))
            throw FormatError("primitive config line " + std::to_string(line_no) +
                              ": expected 'name arity'");
        if (arity == "0")
            terminals.push_back(name);
        else if (arity == "2")
            functions.push_back(name);
        else
            throw UnsupportedArity("primitive '" + name + "' has arity " + arity +
                                   "; only 0 and 2 are supported");
    }
    return PrimitiveSet(std::move(terminals), std::move(functions));
}

PrimitiveSet PrimitiveSet::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open primitive config '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

} // namespace randtree
