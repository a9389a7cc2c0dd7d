#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace randtree {

// Base of every library error. what() is "<Kind>: <detail>" so callers that
// only log see the contract name without catching each type.
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, std::string_view detail)
        : std::runtime_error(std::string(kind) + ": " + std::string(detail)) {}
};

#define RANDTREE_DEFINE_ERROR(Kind)                                        \
    class Kind : public Error {                                            \
    public:                                                                \
        explicit Kind(std::string_view detail) : Error(#Kind, detail) {}   \
    }

RANDTREE_DEFINE_ERROR(DomainError);        // argument outside its stated range
RANDTREE_DEFINE_ERROR(AllocationError);    // buffer could not be allocated
RANDTREE_DEFINE_ERROR(InvalidShape);       // tag/opcode sequence is not a preorder tree
RANDTREE_DEFINE_ERROR(InvalidSize);        // tree size not an odd positive integer
RANDTREE_DEFINE_ERROR(UnsupportedArity);   // primitive arity other than 0 or 2
RANDTREE_DEFINE_ERROR(DuplicateName);      // primitive name repeated
RANDTREE_DEFINE_ERROR(IncompleteSet);      // missing a terminal or a function
RANDTREE_DEFINE_ERROR(TooManyPrimitives);  // opcodes must fit one byte
RANDTREE_DEFINE_ERROR(RecursionLimit);     // recursive oracle exceeded its call budget
RANDTREE_DEFINE_ERROR(TooLarge);           // input above a hard size cap
RANDTREE_DEFINE_ERROR(FormatError);        // malformed file or stream
RANDTREE_DEFINE_ERROR(PrimitiveMismatch);  // file primitives differ from expected
RANDTREE_DEFINE_ERROR(TooFewTrials);       // not enough samples for the test
RANDTREE_DEFINE_ERROR(TooFewPoints);       // not enough distinct points for a fit
RANDTREE_DEFINE_ERROR(IoError);            // filesystem read/write failure
RANDTREE_DEFINE_ERROR(ClockError);         // timer returned a nonpositive duration
RANDTREE_DEFINE_ERROR(Overflow);           // exact integer result exceeds 64 bits

#undef RANDTREE_DEFINE_ERROR

} // namespace randtree
