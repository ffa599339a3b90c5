#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgraph {

enum class ErrorCode {
    // graph construction and input
    TooFewVertices,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    NonpositiveLength,
    MissingLength,
    Parse,
    Io,
    // linear algebra
    ConvergenceFailure,
    NonpositiveEigenvalue,
    // spanning trees
    TooLarge,
    NonIntegerDeterminant,
    NotRegular,
    // zeta functions
    EigenvalueOutOfRange,
    HalfLinePole,
    HurwitzDomain,
    SNotConvergent,
    NotEquilateral,
    // secular solver
    RootRefinementFailure,
    GridTooCoarse,
    // bounds
    LengthsOutOfWindow,
    NotApplicable,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the graph-file reader; carries the 1-based line number (0 when
/// the problem is not tied to a line, e.g. an unreadable file).
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& what)
        : Error(code, what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace qgraph
