#ifndef MAXCUT_ERRORS_HPP
#define MAXCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxcut {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input contained a loop edge (u,u). Loops can never cross a cut.
struct SelfLoopError : Error {
    explicit SelfLoopError(int v)
        : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

/// Edge weight outside the accepted range (must be >= 1 and fit 32 bits).
struct BadWeightError : Error {
    using Error::Error;
};

struct VertexOutOfRangeError : Error {
    explicit VertexOutOfRangeError(int v)
        : Error("vertex id out of range: " + std::to_string(v)), vertex(v) {}
    int vertex;
};

/// A rule was applied whose precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// classify_leaf_block was handed a vertex set that is not a leaf block.
struct NotALeafBlockError : Error {
    using Error::Error;
};

/// select_rule was called on a graph without edges.
struct NoEdgesError : Error {
    using Error::Error;
};

/// A solver restricted to uniform-clique-forests received something else.
struct NotUcfError : Error {
    using Error::Error;
};

/// Brute-force enumeration guard tripped.
struct TooLargeError : Error {
    using Error::Error;
};

/// A constructive bound that must hold by the theory failed at runtime.
/// Seeing this means an unanticipated graph shape reached the cut
/// reconstruction; it is a finding, not a recoverable condition.
struct ContractViolatedError : Error {
    using Error::Error;
};

/// Malformed or inconsistent reduction-step payload.
struct MalformedPayloadError : Error {
    using Error::Error;
};

struct SubsetNotContainedError : Error {
    using Error::Error;
};

/// Input file rejected by the parser.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

struct BadParametersError : Error {
    using Error::Error;
};

/// Rule selection reached a state the Lemma-12 case analysis says is
/// impossible. Raised instead of silently emitting a wrong instance.
struct SelectionFailedError : Error {
    using Error::Error;
};

}  // namespace maxcut

#endif
